import { BinRow, bySeries, parseTable, requireSeries } from './csv.js';
import { PanelSpec, Point, Series, renderChart } from './svg.js';

function toPoints(rows: BinRow[]): Point[] {
  return rows.map((r) => ({
    x: (r.binLo + r.binHi) / 2,
    y: r.freq,
    yLo: r.ciLo,
    yHi: r.ciHi,
  }));
}

/** Identity frequency against word length, search series next to the
 *  uniform-word baseline. */
export function plotWordsSvg(csvText: string): string {
  const rows = parseTable(csvText);
  requireSeries(rows, ['free_identity', 'abelian_identity', 'word_baseline']);
  const series: Series[] = [
    { label: 'free group', color: '#1f77b4', points: toPoints(bySeries(rows, 'free_identity')) },
    { label: 'abelianized', color: '#2ca02c', points: toPoints(bySeries(rows, 'abelian_identity')) },
    {
      label: 'uniform words',
      color: '#d62728',
      points: toPoints(bySeries(rows, 'word_baseline')),
      line: false,
    },
  ];
  const panel: PanelSpec = {
    title: 'Identity words found by description search',
    xLabel: 'word length',
    yLabel: 'identity frequency',
    series,
    yFloor: 1e-5,
  };
  return renderChart([panel]);
}

/** Two panels against degree: non-giant frequency with the random-pair
 *  bound dashed, and solvable frequency. */
export function plotPermsSvg(csvText: string): string {
  const rows = parseTable(csvText);
  requireSeries(rows, ['non_giant', 'solvable', 'theorem3_bound']);
  const left: PanelSpec = {
    title: 'Groups other than S_n and A_n',
    xLabel: 'degree n',
    yLabel: 'frequency',
    yFloor: 1e-5,
    series: [
      { label: 'search', color: '#1f77b4', points: toPoints(bySeries(rows, 'non_giant')) },
      {
        label: 'random-pair bound',
        color: '#555555',
        points: toPoints(bySeries(rows, 'theorem3_bound')),
        dashed: true,
      },
    ],
  };
  const baseline = bySeries(rows, 'sn_baseline');
  if (baseline.length > 0) {
    left.series.push({
      label: 'uniform pairs',
      color: '#d62728',
      points: toPoints(baseline),
      line: false,
    });
  }
  const right: PanelSpec = {
    title: 'Solvable groups',
    xLabel: 'degree n',
    yLabel: 'frequency',
    yFloor: 1e-5,
    series: [
      { label: 'search', color: '#2ca02c', points: toPoints(bySeries(rows, 'solvable')) },
    ],
  };
  return renderChart([left, right]);
}
