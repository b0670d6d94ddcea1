import { describe, expect, it } from 'vitest';
import { CsvFormatError, EXPECTED_HEADER, bySeries, parseTable, requireSeries } from '../src/csv.js';

const sample = [
  EXPECTED_HEADER,
  '16,16,1200,3,0.0025,0.00085,0.0073,free_identity',
  '16,16,1200,9,0.0075,0.0039,0.014,abelian_identity',
  '50,50,10000,0,0.0,0.0,0.00038,word_baseline',
].join('\n');

describe('parseTable', () => {
  it('parses valid rows', () => {
    const rows = parseTable(sample);
    expect(rows).toHaveLength(3);
    expect(rows[0].binLo).toBe(16);
    expect(rows[0].series).toBe('free_identity');
    expect(rows[2].freq).toBe(0);
  });

  it('rejects a bad header', () => {
    expect(() => parseTable('a,b,c\n1,2,3')).toThrow(CsvFormatError);
  });

  it('rejects short rows', () => {
    expect(() => parseTable(`${EXPECTED_HEADER}\n1,2,3`)).toThrow(CsvFormatError);
  });

  it('rejects frequencies outside [0,1]', () => {
    const bad = `${EXPECTED_HEADER}\n1,1,10,20,2.0,1.9,2.1,s`;
    expect(() => parseTable(bad)).toThrow(/freq out of/);
  });

  it('rejects intervals not covering the estimate', () => {
    const bad = `${EXPECTED_HEADER}\n1,1,10,2,0.2,0.5,0.9,s`;
    expect(() => parseTable(bad)).toThrow(/interval/);
  });

  it('rejects non-numeric fields', () => {
    const bad = `${EXPECTED_HEADER}\n1,1,x,2,0.2,0.1,0.3,s`;
    expect(() => parseTable(bad)).toThrow(/non-numeric/);
  });
});

describe('series helpers', () => {
  it('filters by series name', () => {
    const rows = parseTable(sample);
    expect(bySeries(rows, 'word_baseline')).toHaveLength(1);
  });

  it('reports missing series', () => {
    const rows = parseTable(sample);
    expect(() => requireSeries(rows, ['non_giant'])).toThrow(/missing series: non_giant/);
    expect(() => requireSeries(rows, ['free_identity'])).not.toThrow();
  });
});
