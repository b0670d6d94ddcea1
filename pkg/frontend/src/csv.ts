export interface BinRow {
  binLo: number;
  binHi: number;
  trials: number;
  hits: number;
  freq: number;
  ciLo: number;
  ciHi: number;
  series: string;
}

export const EXPECTED_HEADER = 'bin_lo,bin_hi,trials,hits,freq,ci_lo,ci_hi,series';

export class CsvFormatError extends Error {}

/** Parse a frequency table produced by the search harness.
 *  The header must match the schema exactly. */
export function parseTable(text: string): BinRow[] {
  const lines = text.split(/\r?\n/).filter((line) => line.length > 0);
  if (lines.length === 0 || lines[0] !== EXPECTED_HEADER) {
    throw new CsvFormatError(
      `bad header: expected "${EXPECTED_HEADER}", got "${lines[0] ?? ''}"`,
    );
  }
  const rows: BinRow[] = [];
  for (const line of lines.slice(1)) {
    const parts = line.split(',');
    if (parts.length !== 8) {
      throw new CsvFormatError(`bad row (${parts.length} fields): ${line}`);
    }
    const row: BinRow = {
      binLo: Number(parts[0]),
      binHi: Number(parts[1]),
      trials: Number(parts[2]),
      hits: Number(parts[3]),
      freq: Number(parts[4]),
      ciLo: Number(parts[5]),
      ciHi: Number(parts[6]),
      series: parts[7],
    };
    for (const key of ['binLo', 'binHi', 'trials', 'hits', 'freq', 'ciLo', 'ciHi'] as const) {
      if (!Number.isFinite(row[key])) {
        throw new CsvFormatError(`non-numeric ${key} in row: ${line}`);
      }
    }
    if (row.freq < 0 || row.freq > 1) {
      throw new CsvFormatError(`freq out of [0,1] in row: ${line}`);
    }
    if (row.ciLo > row.freq + 1e-12 || row.ciHi < row.freq - 1e-12) {
      throw new CsvFormatError(`interval does not cover freq in row: ${line}`);
    }
    rows.push(row);
  }
  return rows;
}

export function bySeries(rows: BinRow[], name: string): BinRow[] {
  return rows.filter((r) => r.series === name);
}

export function requireSeries(rows: BinRow[], names: string[]): void {
  const present = new Set(rows.map((r) => r.series));
  const missing = names.filter((n) => !present.has(n));
  if (missing.length > 0) {
    throw new CsvFormatError(`missing series: ${missing.join(', ')}`);
  }
}
