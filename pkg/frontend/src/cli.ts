import { readFileSync, writeFileSync } from 'fs';
import { pathToFileURL } from 'url';
import { CsvFormatError } from './csv.js';
import { plotPermsSvg, plotWordsSvg } from './plots.js';

function usage(): never {
  console.error('usage: plot-words <table.csv> <out.svg> | plot-perms <table.csv> <out.svg>');
  process.exit(2);
}

export function main(argv: string[]): number {
  if (argv.length !== 3) usage();
  const [command, csvPath, outPath] = argv;
  if (command !== 'plot-words' && command !== 'plot-perms') usage();
  if (!outPath.endsWith('.svg')) {
    console.error(`error: unsupported output format for ${outPath} (only .svg)`);
    return 2;
  }
  let text: string;
  try {
    text = readFileSync(csvPath, 'utf8');
  } catch (err) {
    console.error(`error: cannot read ${csvPath}: ${(err as Error).message}`);
    return 2;
  }
  try {
    const svg = command === 'plot-words' ? plotWordsSvg(text) : plotPermsSvg(text);
    writeFileSync(outPath, svg);
  } catch (err) {
    if (err instanceof CsvFormatError) {
      console.error(`error: ${err.message}`);
      return 2;
    }
    throw err;
  }
  return 0;
}

if (process.argv[1] && import.meta.url === pathToFileURL(process.argv[1]).href) {
  process.exit(main(process.argv.slice(2)));
}
