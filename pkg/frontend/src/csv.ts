/**
 * CSV reading for the simulator's artifact files: a single header row
 * followed by %.12e-formatted numeric rows.
 */

import { readFileSync } from "fs";
import Papa from "papaparse";

export class CsvError extends Error {}

export interface CsvTable {
  columns: string[];
  /** rows[i][j] is the value of columns[j] in data row i. */
  rows: number[][];
}

export function readCsv(path: string): CsvTable {
  let text: string;
  try {
    text = readFileSync(path, "utf8");
  } catch (err) {
    throw new CsvError(`cannot read ${path}: ${(err as Error).message}`);
  }
  const parsed = Papa.parse<string[]>(text.trim(), { skipEmptyLines: true });
  if (parsed.errors.length > 0) {
    throw new CsvError(`${path}: ${parsed.errors[0].message}`);
  }
  const lines = parsed.data;
  if (lines.length === 0) {
    throw new CsvError(`${path}: empty CSV (no header row)`);
  }
  const columns = lines[0];
  if (lines.length === 1) {
    throw new CsvError(`${path}: empty CSV (header but no data rows)`);
  }
  const rows: number[][] = [];
  for (let i = 1; i < lines.length; i++) {
    if (lines[i].length !== columns.length) {
      throw new CsvError(
        `${path}: row ${i} has ${lines[i].length} fields, expected ${columns.length}`,
      );
    }
    const row = lines[i].map(Number);
    const bad = row.findIndex((x) => Number.isNaN(x));
    if (bad >= 0) {
      throw new CsvError(
        `${path}: row ${i}, column '${columns[bad]}' is not numeric`,
      );
    }
    rows.push(row);
  }
  return { columns, rows };
}

export function column(table: CsvTable, name: string): number[] {
  const k = table.columns.indexOf(name);
  if (k < 0) {
    throw new CsvError(`missing column '${name}'`);
  }
  return table.rows.map((row) => row[k]);
}

/** All column names matching prefix_1, prefix_2, ... in numeric order. */
export function prefixedColumns(table: CsvTable, prefix: string): string[] {
  const re = new RegExp(`^${prefix}_(\\d+)$`);
  const found = table.columns
    .map((name) => ({ name, m: re.exec(name) }))
    .filter((x) => x.m !== null)
    .map((x) => ({ name: x.name, index: Number(x.m![1]) }));
  if (found.length === 0) {
    throw new CsvError(`missing column '${prefix}_1' (no '${prefix}_*' columns)`);
  }
  found.sort((a, b) => a.index - b.index);
  return found.map((x) => x.name);
}
