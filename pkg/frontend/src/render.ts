/**
 * The four figure kinds, each a pure file-in/file-out transform from one of
 * the simulator CLI's CSV artifacts to an SVG image plus a JSON sidecar with
 * exact min/max of every plotted column. No physics is recomputed here.
 */

import { writeFileSync } from "fs";
import yargs from "yargs";
import { CsvTable, column, prefixedColumns, readCsv } from "./csv";
import { statsFor, writeSidecar } from "./stats";
import { Series, heatmapPlot, linePlot } from "./svg";

const PALETTE = ["#c62828", "#1565c0", "#2e7d32", "#ef6c00", "#6a1b9a", "#00838f"];

function writeFigure(
  outPath: string,
  svg: string,
  table: CsvTable,
  plotted: string[],
): void {
  // Build everything (and surface any data error) before touching the
  // filesystem, so a failure never leaves a partial image behind.
  const stats = statsFor(table, plotted);
  writeFileSync(outPath, svg);
  writeSidecar(outPath, stats);
}

/** Spectrum vs chemical potential from sweep.csv (mu, e_1..e_2L). */
export function renderSpectrum(inPath: string, outPath: string): void {
  const table = readCsv(inPath);
  const mu = column(table, "mu");
  const energyCols = prefixedColumns(table, "e");
  const series: Series[] = energyCols.map((name) => ({
    x: mu,
    y: column(table, name),
    color: "#555",
    label: name,
    width: 0.7,
  }));
  const svg = linePlot(series, {
    title: "Quasiparticle spectrum",
    xLabel: "chemical potential mu",
    yLabel: "energy E",
  });
  writeFigure(outPath, svg, table, ["mu", ...energyCols]);
}

/** Per-site probability of each zero mode from modes.csv (p_1..p_L rows). */
export function renderProfile(inPath: string, outPath: string): void {
  const table = readCsv(inPath);
  const modeLabels = column(table, "mode");
  const siteCols = prefixedColumns(table, "p");
  const sites = siteCols.map((_, j) => j + 1);
  const series: Series[] = table.rows.map((row, i) => ({
    x: sites,
    y: siteCols.map((name) => row[table.columns.indexOf(name)]),
    color: PALETTE[i % PALETTE.length],
    label: `mode ${modeLabels[i]}`,
  }));
  const svg = linePlot(series, {
    title: "Zero-mode site probability",
    xLabel: "site",
    yLabel: "probability",
    legend: true,
  });
  writeFigure(outPath, svg, table, siteCols);
}

/** Fidelity / Re R / IPR overlay from quench.csv (t, f, re_r, im_r, ipr). */
export function renderSeriesOverlay(inPath: string, outPath: string): void {
  const table = readCsv(inPath);
  const t = column(table, "t");
  const overlay: [string, string][] = [
    ["f", PALETTE[0]],
    ["re_r", PALETTE[1]],
    ["ipr", PALETTE[2]],
  ];
  const series: Series[] = overlay.map(([name, color]) => ({
    x: t,
    y: column(table, name),
    color,
    label: name,
  }));
  const svg = linePlot(series, {
    title: "Quench observables",
    xLabel: "time t",
    yLabel: "value",
    legend: true,
  });
  writeFigure(outPath, svg, table, ["t", ...overlay.map(([name]) => name)]);
}

/** Spatiotemporal probability field from quench_heatmap.csv (site_1..site_L). */
export function renderHeatmap(inPath: string, outPath: string): void {
  const table = readCsv(inPath);
  const siteCols = prefixedColumns(table, "site");
  const indices = siteCols.map((name) => table.columns.indexOf(name));
  const values = table.rows.map((row) => indices.map((k) => row[k]));
  const svg = heatmapPlot(values, {
    title: "Spatiotemporal probability",
    xLabel: "site",
    yLabel: "time step",
  });
  writeFigure(outPath, svg, table, siteCols);
}

export type Renderer = (inPath: string, outPath: string) => void;

/** Shared script entry point: parse --in/--out, render, map errors to exit 1. */
export function runScript(render: Renderer, argv: string[]): number {
  let args: { in: string; out: string };
  try {
    args = yargs(argv)
      .option("in", { type: "string", demandOption: true, describe: "input CSV path" })
      .option("out", { type: "string", demandOption: true, describe: "output SVG path" })
      .strict()
      .exitProcess(false)
      .parseSync();
  } catch (err) {
    console.error((err as Error).message);
    return 2;
  }
  try {
    render(args.in, args.out);
  } catch (err) {
    console.error((err as Error).message);
    return 1;
  }
  return 0;
}
