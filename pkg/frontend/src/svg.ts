/**
 * Minimal hand-built SVG plotting: line charts and heatmaps with axes,
 * tick labels, and legends. No external rendering dependencies.
 */

export interface Series {
  x: number[];
  y: number[];
  color: string;
  label: string;
  width?: number;
}

export interface PlotOptions {
  title: string;
  xLabel: string;
  yLabel: string;
  legend?: boolean;
}

const W = 760;
const H = 480;
const MARGIN = { left: 70, right: 20, top: 40, bottom: 55 };

interface Scale {
  (v: number): number;
}

function linearScale(d0: number, d1: number, r0: number, r1: number): Scale {
  const span = d1 - d0 || 1;
  return (v) => r0 + ((v - d0) / span) * (r1 - r0);
}

function ticks(lo: number, hi: number, count = 6): number[] {
  const span = hi - lo || 1;
  const step = Math.pow(10, Math.floor(Math.log10(span / count)));
  const err = span / count / step;
  const refined = err >= 7.5 ? step * 10 : err >= 3 ? step * 5 : err >= 1.5 ? step * 2 : step;
  const out: number[] = [];
  for (let t = Math.ceil(lo / refined) * refined; t <= hi + 1e-12 * span; t += refined) {
    out.push(Math.abs(t) < 1e-12 * span ? 0 : t);
  }
  return out;
}

function fmt(v: number): string {
  if (v === 0) return "0";
  const a = Math.abs(v);
  if (a >= 1e4 || a < 1e-3) return v.toExponential(1);
  return String(Number(v.toPrecision(4)));
}

function esc(s: string): string {
  return s.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

function extent(arrays: number[][]): [number, number] {
  let lo = Infinity;
  let hi = -Infinity;
  for (const a of arrays) {
    for (const v of a) {
      if (v < lo) lo = v;
      if (v > hi) hi = v;
    }
  }
  return [lo, hi];
}

function frame(
  opts: PlotOptions,
  sx: Scale,
  sy: Scale,
  xdom: [number, number],
  ydom: [number, number],
): string[] {
  const parts: string[] = [];
  const { left, right, top, bottom } = MARGIN;
  parts.push(
    `<rect x="${left}" y="${top}" width="${W - left - right}" ` +
      `height="${H - top - bottom}" fill="none" stroke="#444"/>`,
  );
  for (const t of ticks(xdom[0], xdom[1])) {
    const x = sx(t);
    parts.push(`<line x1="${x}" y1="${H - bottom}" x2="${x}" y2="${H - bottom + 5}" stroke="#444"/>`);
    parts.push(
      `<text x="${x}" y="${H - bottom + 20}" font-size="12" text-anchor="middle">${fmt(t)}</text>`,
    );
  }
  for (const t of ticks(ydom[0], ydom[1])) {
    const y = sy(t);
    parts.push(`<line x1="${left - 5}" y1="${y}" x2="${left}" y2="${y}" stroke="#444"/>`);
    parts.push(
      `<text x="${left - 8}" y="${y + 4}" font-size="12" text-anchor="end">${fmt(t)}</text>`,
    );
  }
  parts.push(
    `<text x="${(left + W - right) / 2}" y="${H - 12}" font-size="14" text-anchor="middle">` +
      `${esc(opts.xLabel)}</text>`,
  );
  parts.push(
    `<text x="18" y="${(top + H - bottom) / 2}" font-size="14" text-anchor="middle" ` +
      `transform="rotate(-90 18 ${(top + H - bottom) / 2})">${esc(opts.yLabel)}</text>`,
  );
  parts.push(
    `<text x="${W / 2}" y="24" font-size="16" text-anchor="middle">${esc(opts.title)}</text>`,
  );
  return parts;
}

export function linePlot(series: Series[], opts: PlotOptions): string {
  const { left, right, top, bottom } = MARGIN;
  const xdom = extent(series.map((s) => s.x));
  const ydom = extent(series.map((s) => s.y));
  const sx = linearScale(xdom[0], xdom[1], left, W - right);
  const sy = linearScale(ydom[0], ydom[1], H - bottom, top);
  const parts = [
    `<svg xmlns="http://www.w3.org/2000/svg" width="${W}" height="${H}" ` +
      `viewBox="0 0 ${W} ${H}" font-family="sans-serif">`,
    `<rect width="${W}" height="${H}" fill="white"/>`,
    ...frame(opts, sx, sy, xdom, ydom),
  ];
  for (const s of series) {
    const pts = s.x.map((x, i) => `${sx(x).toFixed(2)},${sy(s.y[i]).toFixed(2)}`).join(" ");
    parts.push(
      `<polyline points="${pts}" fill="none" stroke="${s.color}" ` +
        `stroke-width="${s.width ?? 1.5}"/>`,
    );
  }
  if (opts.legend && series.length > 1) {
    series.forEach((s, i) => {
      const y = top + 16 + 18 * i;
      parts.push(`<line x1="${W - right - 150}" y1="${y}" x2="${W - right - 120}" y2="${y}" ` +
        `stroke="${s.color}" stroke-width="2"/>`);
      parts.push(
        `<text x="${W - right - 112}" y="${y + 4}" font-size="12">${esc(s.label)}</text>`,
      );
    });
  }
  parts.push("</svg>");
  return parts.join("\n");
}

/** Two-stop colormap white -> dark blue. */
function heatColor(v: number): string {
  const t = Math.max(0, Math.min(1, v));
  const r = Math.round(255 - 225 * t);
  const g = Math.round(255 - 205 * t);
  const b = Math.round(255 - 115 * t);
  return `rgb(${r},${g},${b})`;
}

export function heatmapPlot(
  values: number[][],
  opts: PlotOptions,
): string {
  const { left, right, top, bottom } = MARGIN;
  const nRows = values.length;
  const nCols = values[0].length;
  const [lo, hi] = extent(values);
  const span = hi - lo || 1;
  const cw = (W - left - right) / nCols;
  const ch = (H - top - bottom) / nRows;
  const sx = linearScale(1, nCols, left, W - right);
  const sy = linearScale(0, nRows - 1, H - bottom, top);
  const parts = [
    `<svg xmlns="http://www.w3.org/2000/svg" width="${W}" height="${H}" ` +
      `viewBox="0 0 ${W} ${H}" font-family="sans-serif">`,
    `<rect width="${W}" height="${H}" fill="white"/>`,
  ];
  for (let i = 0; i < nRows; i++) {
    // low row index = early time at the bottom
    const y = top + (nRows - 1 - i) * ch;
    for (let j = 0; j < nCols; j++) {
      const c = heatColor((values[i][j] - lo) / span);
      parts.push(
        `<rect x="${(left + j * cw).toFixed(2)}" y="${y.toFixed(2)}" ` +
          `width="${(cw + 0.5).toFixed(2)}" height="${(ch + 0.5).toFixed(2)}" fill="${c}"/>`,
      );
    }
  }
  parts.push(...frame(opts, sx, sy, [1, nCols], [0, nRows - 1]));
  parts.push("</svg>");
  return parts.join("\n");
}
