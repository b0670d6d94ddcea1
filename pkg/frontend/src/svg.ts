/** Minimal SVG chart builder: log-scale y axis, points with error bars,
 *  optional dashed reference lines. No timestamps, so output is a pure
 *  function of the data. */

export interface Point {
  x: number;
  y: number; // 0 means "below the floor", drawn at the axis floor
  yLo?: number;
  yHi?: number;
}

export interface Series {
  label: string;
  color: string;
  points: Point[];
  dashed?: boolean;
  line?: boolean;
}

export interface PanelSpec {
  title: string;
  xLabel: string;
  yLabel: string;
  series: Series[];
  yFloor: number; // log-axis floor; zero frequencies sit on it
}

const PANEL_W = 420;
const PANEL_H = 340;
const MARGIN = { top: 36, right: 16, bottom: 48, left: 64 };

function esc(s: string): string {
  return s.replace(/&/g, '&amp;').replace(/</g, '&lt;').replace(/>/g, '&gt;');
}

function niceLogTicks(lo: number, hi: number): number[] {
  const ticks: number[] = [];
  for (let e = Math.floor(Math.log10(lo)); e <= Math.ceil(Math.log10(hi)); e++) {
    ticks.push(10 ** e);
  }
  return ticks;
}

function renderPanel(spec: PanelSpec, xOffset: number): string {
  const plotW = PANEL_W - MARGIN.left - MARGIN.right;
  const plotH = PANEL_H - MARGIN.top - MARGIN.bottom;

  const xs = spec.series.flatMap((s) => s.points.map((p) => p.x));
  if (xs.length === 0) {
    throw new Error(`panel "${spec.title}" has no data`);
  }
  const xMin = Math.min(...xs);
  const xMax = Math.max(...xs);
  const xSpan = xMax > xMin ? xMax - xMin : 1;

  const positiveYs = spec.series.flatMap((s) =>
    s.points.flatMap((p) => [p.y, p.yHi ?? p.y]).filter((v) => v > 0),
  );
  const yMax = Math.max(spec.yFloor * 10, ...positiveYs, 1e-12);
  const yLo = spec.yFloor;

  const px = (x: number) => MARGIN.left + ((x - xMin) / xSpan) * plotW;
  const py = (y: number) => {
    const clamped = Math.max(y, yLo);
    const t = (Math.log10(clamped) - Math.log10(yLo)) / (Math.log10(yMax) - Math.log10(yLo));
    return MARGIN.top + plotH - t * plotH;
  };

  const parts: string[] = [];
  parts.push(`<g transform="translate(${xOffset},0)">`);
  parts.push(
    `<rect x="${MARGIN.left}" y="${MARGIN.top}" width="${plotW}" height="${plotH}" fill="none" stroke="#888"/>`,
  );
  parts.push(
    `<text x="${MARGIN.left + plotW / 2}" y="20" text-anchor="middle" font-size="14">${esc(spec.title)}</text>`,
  );
  parts.push(
    `<text x="${MARGIN.left + plotW / 2}" y="${PANEL_H - 10}" text-anchor="middle" font-size="12">${esc(spec.xLabel)}</text>`,
  );
  parts.push(
    `<text x="16" y="${MARGIN.top + plotH / 2}" text-anchor="middle" font-size="12" transform="rotate(-90 16 ${MARGIN.top + plotH / 2})">${esc(spec.yLabel)}</text>`,
  );

  for (const tick of niceLogTicks(yLo, yMax)) {
    if (tick < yLo || tick > yMax) continue;
    const y = py(tick);
    parts.push(
      `<line x1="${MARGIN.left - 4}" y1="${y}" x2="${MARGIN.left}" y2="${y}" stroke="#444"/>`,
    );
    parts.push(
      `<text x="${MARGIN.left - 8}" y="${y + 4}" text-anchor="end" font-size="10">1e${Math.round(Math.log10(tick))}</text>`,
    );
  }
  const xTickCount = 5;
  for (let i = 0; i <= xTickCount; i++) {
    const x = xMin + (xSpan * i) / xTickCount;
    parts.push(
      `<line x1="${px(x)}" y1="${MARGIN.top + plotH}" x2="${px(x)}" y2="${MARGIN.top + plotH + 4}" stroke="#444"/>`,
    );
    parts.push(
      `<text x="${px(x)}" y="${MARGIN.top + plotH + 16}" text-anchor="middle" font-size="10">${Math.round(x)}</text>`,
    );
  }

  let legendY = MARGIN.top + 8;
  for (const s of spec.series) {
    const sorted = [...s.points].sort((a, b) => a.x - b.x);
    const dash = s.dashed ? ' stroke-dasharray="6,4"' : '';
    if (s.line !== false) {
      const path = sorted.map((p, i) => `${i ? 'L' : 'M'}${px(p.x)},${py(p.y)}`).join(' ');
      parts.push(`<path d="${path}" fill="none" stroke="${s.color}" stroke-width="1.5"${dash}/>`);
    }
    for (const p of sorted) {
      if (p.yLo !== undefined && p.yHi !== undefined) {
        parts.push(
          `<line x1="${px(p.x)}" y1="${py(p.yLo)}" x2="${px(p.x)}" y2="${py(p.yHi)}" stroke="${s.color}" stroke-width="1"/>`,
        );
      }
      const marker = p.y <= spec.yFloor ? 'floor-marker' : 'point';
      const r = marker === 'floor-marker' ? 2 : 3;
      parts.push(`<circle cx="${px(p.x)}" cy="${py(p.y)}" r="${r}" fill="${s.color}"/>`);
    }
    parts.push(
      `<line x1="${MARGIN.left + plotW - 120}" y1="${legendY}" x2="${MARGIN.left + plotW - 100}" y2="${legendY}" stroke="${s.color}" stroke-width="2"${dash}/>`,
    );
    parts.push(
      `<text x="${MARGIN.left + plotW - 94}" y="${legendY + 4}" font-size="10">${esc(s.label)}</text>`,
    );
    legendY += 14;
  }
  parts.push('</g>');
  return parts.join('\n');
}

export function renderChart(panels: PanelSpec[]): string {
  const width = PANEL_W * panels.length;
  const body = panels.map((p, i) => renderPanel(p, i * PANEL_W)).join('\n');
  return [
    `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${PANEL_H}" viewBox="0 0 ${width} ${PANEL_H}">`,
    '<rect width="100%" height="100%" fill="white"/>',
    body,
    '</svg>',
    '',
  ].join('\n');
}
