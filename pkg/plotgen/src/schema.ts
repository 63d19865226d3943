/**
 * CSV schemas for the benchmark harness outputs.
 *
 * results.csv: one row per (instance, strategy) trial.
 * curves.csv: one row per clique number with the reference bound series.
 * Optional cells (bounds outside their domain) are empty strings in the CSV
 * and become null here; every other field must parse, and a violation is
 * reported with the offending column name.
 */

import Papa from "papaparse";

export interface TrialRow {
  instance: string;
  n: number;
  k: number;
  chi: number;
  alpha: number;
  strategy: string;
  interventions_used: number;
  node_accesses: number;
  info_lb: number;
  chromatic_lb: number | null;
  katona_lb_n: number;
  sepsys_size_chi: number;
  sepsys_size_n: number;
  wall_time: number;
}

export interface CurveRow {
  chi: number;
  info_lb: number;
  chromatic_lb: number | null;
  achievable_chi_sepsys: number | null;
  construction_chi_sepsys: number | null;
  sepsys_ub_n: number;
}

export const RESULT_COLUMNS = [
  "instance",
  "n",
  "k",
  "chi",
  "alpha",
  "strategy",
  "interventions_used",
  "node_accesses",
  "info_lb",
  "chromatic_lb",
  "katona_lb_n",
  "sepsys_size_chi",
  "sepsys_size_n",
  "wall_time",
] as const;

export const CURVE_COLUMNS = [
  "chi",
  "info_lb",
  "chromatic_lb",
  "achievable_chi_sepsys",
  "construction_chi_sepsys",
  "sepsys_ub_n",
] as const;

/** Raised for any malformed input; message always names the column or file. */
export class SchemaError extends Error {}

type RawRow = Record<string, string>;

function parseRaw(text: string, label: string): RawRow[] {
  const parsed = Papa.parse<RawRow>(text.trim(), {
    header: true,
    skipEmptyLines: true,
  });
  if (parsed.errors.length > 0) {
    const first = parsed.errors[0]!;
    throw new SchemaError(`${label}: malformed CSV (${first.message})`);
  }
  return parsed.data;
}

function checkHeader(
  rows: RawRow[],
  expected: readonly string[],
  label: string,
): void {
  const present = rows.length > 0 ? Object.keys(rows[0]!) : expected.slice();
  for (const column of expected) {
    if (!present.includes(column)) {
      throw new SchemaError(`${label}: missing column "${column}"`);
    }
  }
  for (const column of present) {
    if (!expected.includes(column)) {
      throw new SchemaError(`${label}: unexpected column "${column}"`);
    }
  }
}

function numberCell(row: RawRow, column: string, label: string): number {
  const cell = row[column];
  const value = cell === undefined || cell === "" ? NaN : Number(cell);
  if (!Number.isFinite(value)) {
    throw new SchemaError(
      `${label}: column "${column}" has non-numeric value "${cell ?? ""}"`,
    );
  }
  return value;
}

function optionalCell(
  row: RawRow,
  column: string,
  label: string,
): number | null {
  const cell = row[column];
  if (cell === undefined || cell === "") {
    return null;
  }
  return numberCell(row, column, label);
}

function stringCell(row: RawRow, column: string, label: string): string {
  const cell = row[column];
  if (cell === undefined || cell === "") {
    throw new SchemaError(`${label}: column "${column}" is empty`);
  }
  return cell;
}

export function parseResults(text: string): TrialRow[] {
  const label = "results";
  const rows = parseRaw(text, label);
  checkHeader(rows, RESULT_COLUMNS, label);
  return rows.map((row) => ({
    instance: stringCell(row, "instance", label),
    n: numberCell(row, "n", label),
    k: numberCell(row, "k", label),
    chi: numberCell(row, "chi", label),
    alpha: numberCell(row, "alpha", label),
    strategy: stringCell(row, "strategy", label),
    interventions_used: numberCell(row, "interventions_used", label),
    node_accesses: numberCell(row, "node_accesses", label),
    info_lb: numberCell(row, "info_lb", label),
    chromatic_lb: optionalCell(row, "chromatic_lb", label),
    katona_lb_n: numberCell(row, "katona_lb_n", label),
    sepsys_size_chi: numberCell(row, "sepsys_size_chi", label),
    sepsys_size_n: numberCell(row, "sepsys_size_n", label),
    wall_time: numberCell(row, "wall_time", label),
  }));
}

export function parseCurves(text: string): CurveRow[] {
  const label = "curves";
  const rows = parseRaw(text, label);
  checkHeader(rows, CURVE_COLUMNS, label);
  if (rows.length === 0) {
    throw new SchemaError(`${label}: no data rows`);
  }
  return rows.map((row) => ({
    chi: numberCell(row, "chi", label),
    info_lb: numberCell(row, "info_lb", label),
    chromatic_lb: optionalCell(row, "chromatic_lb", label),
    achievable_chi_sepsys: optionalCell(row, "achievable_chi_sepsys", label),
    construction_chi_sepsys: optionalCell(
      row,
      "construction_chi_sepsys",
      label,
    ),
    sepsys_ub_n: numberCell(row, "sepsys_ub_n", label),
  }));
}
