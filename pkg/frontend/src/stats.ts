/**
 * Sidecar statistics: exact min/max of every plotted column, written next to
 * the figure so downstream checks can confirm rendering never altered data.
 */

import { writeFileSync } from "fs";
import { CsvTable, column } from "./csv";

export interface ColumnStats {
  min: number;
  max: number;
}

export function columnStats(values: number[]): ColumnStats {
  let min = values[0];
  let max = values[0];
  for (const v of values) {
    if (v < min) min = v;
    if (v > max) max = v;
  }
  return { min, max };
}

export function statsFor(
  table: CsvTable,
  names: string[],
): Record<string, ColumnStats> {
  const out: Record<string, ColumnStats> = {};
  for (const name of names) {
    out[name] = columnStats(column(table, name));
  }
  return out;
}

export function sidecarPath(imagePath: string): string {
  return imagePath.replace(/\.svg$/, "") + ".stats.json";
}

export function writeSidecar(
  imagePath: string,
  stats: Record<string, ColumnStats>,
): string {
  const path = sidecarPath(imagePath);
  writeFileSync(path, JSON.stringify(stats, null, 2) + "\n");
  return path;
}
