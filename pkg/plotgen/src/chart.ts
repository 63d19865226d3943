/**
 * SVG chart: experiment counts against clique number.
 *
 * Reference bounds from the curves table are drawn as lines; every strategy
 * present in the results table gets a faint scatter of raw trials plus bold
 * markers at the per-bucket means (buckets are clique numbers rounded to the
 * nearest 10, matching how the harness bins trials).
 */

import type { CurveRow, TrialRow } from "./schema.js";

export const REFERENCE_SERIES: ReadonlyArray<{
  key: keyof CurveRow;
  label: string;
  color: string;
  dash: string;
}> = [
  { key: "info_lb", label: "Information Theoretic LB", color: "#444444", dash: "2 3" },
  {
    key: "chromatic_lb",
    label: "Max. Clique Sep. Sys. Entropic LB",
    color: "#8c564b",
    dash: "6 3",
  },
  {
    key: "achievable_chi_sepsys",
    label: "Max. Clique Sep. Sys. Achievable LB",
    color: "#d62728",
    dash: "1 2",
  },
  {
    key: "construction_chi_sepsys",
    label: "Our Construction Clique Sep. Sys. LB",
    color: "#e377c2",
    dash: "4 2",
  },
  { key: "sepsys_ub_n", label: "Separating System UB", color: "#1f77b4", dash: "" },
];

const STRATEGY_STYLE: Record<string, { color: string; marker: "circle" | "square" }> = {
  hybrid: { color: "#2ca02c", marker: "circle" },
  naive: { color: "#17becf", marker: "square" },
};

const WIDTH = 860;
const HEIGHT = 560;
const MARGIN = { top: 30, right: 280, bottom: 55, left: 70 };

interface Scale {
  (value: number): number;
}

function linearScale(d0: number, d1: number, r0: number, r1: number): Scale {
  const span = d1 - d0 || 1;
  return (value) => r0 + ((value - d0) / span) * (r1 - r0);
}

function ticks(lo: number, hi: number, count: number): number[] {
  const rawStep = (hi - lo) / Math.max(1, count);
  const magnitude = 10 ** Math.floor(Math.log10(rawStep || 1));
  const step =
    [1, 2, 5, 10].map((m) => m * magnitude).find((s) => (hi - lo) / s <= count) ??
    magnitude * 10;
  const first = Math.ceil(lo / step) * step;
  const out: number[] = [];
  for (let v = first; v <= hi + 1e-9; v += step) {
    out.push(Number(v.toFixed(6)));
  }
  return out;
}

export function bucketMeans(
  trials: TrialRow[],
): Array<{ chi: number; mean: number; count: number }> {
  const byBucket = new Map<number, number[]>();
  for (const trial of trials) {
    const bucket = Math.round(trial.chi / 10) * 10;
    const counts = byBucket.get(bucket) ?? [];
    counts.push(trial.interventions_used);
    byBucket.set(bucket, counts);
  }
  return [...byBucket.entries()]
    .sort((a, b) => a[0] - b[0])
    .map(([chi, counts]) => ({
      chi,
      mean: counts.reduce((s, c) => s + c, 0) / counts.length,
      count: counts.length,
    }));
}

function esc(text: string): string {
  return text.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

function marker(
  shape: "circle" | "square",
  x: number,
  y: number,
  size: number,
  fill: string,
  opacity: number,
): string {
  if (shape === "circle") {
    return `<circle cx="${x.toFixed(1)}" cy="${y.toFixed(1)}" r="${size}" fill="${fill}" fill-opacity="${opacity}"/>`;
  }
  const half = size;
  return `<rect x="${(x - half).toFixed(1)}" y="${(y - half).toFixed(1)}" width="${2 * half}" height="${2 * half}" fill="${fill}" fill-opacity="${opacity}"/>`;
}

export function render(results: TrialRow[], curves: CurveRow[]): string {
  const strategies = [...new Set(results.map((r) => r.strategy))].sort();

  const xValues = [
    ...curves.map((c) => c.chi),
    ...results.map((r) => r.chi),
  ];
  const yValues: number[] = [...results.map((r) => r.interventions_used)];
  for (const row of curves) {
    for (const series of REFERENCE_SERIES) {
      const value = row[series.key];
      if (typeof value === "number") {
        yValues.push(value);
      }
    }
  }
  const xLo = Math.min(...xValues);
  const xHi = Math.max(...xValues);
  const yHi = Math.max(...yValues, 1);

  const x = linearScale(xLo, xHi, MARGIN.left, WIDTH - MARGIN.right);
  const y = linearScale(0, yHi * 1.05, HEIGHT - MARGIN.bottom, MARGIN.top);

  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" width="${WIDTH}" height="${HEIGHT}" font-family="Helvetica, Arial, sans-serif" font-size="12">`,
    `<rect width="${WIDTH}" height="${HEIGHT}" fill="white"/>`,
  );

  // axes and grid
  const plotBottom = HEIGHT - MARGIN.bottom;
  const plotRight = WIDTH - MARGIN.right;
  for (const tick of ticks(xLo, xHi, 8)) {
    const px = x(tick);
    parts.push(
      `<line x1="${px}" y1="${MARGIN.top}" x2="${px}" y2="${plotBottom}" stroke="#eeeeee"/>`,
      `<text x="${px}" y="${plotBottom + 18}" text-anchor="middle">${tick}</text>`,
    );
  }
  for (const tick of ticks(0, yHi * 1.05, 8)) {
    const py = y(tick);
    parts.push(
      `<line x1="${MARGIN.left}" y1="${py}" x2="${plotRight}" y2="${py}" stroke="#eeeeee"/>`,
      `<text x="${MARGIN.left - 8}" y="${py + 4}" text-anchor="end">${tick}</text>`,
    );
  }
  parts.push(
    `<line x1="${MARGIN.left}" y1="${plotBottom}" x2="${plotRight}" y2="${plotBottom}" stroke="black"/>`,
    `<line x1="${MARGIN.left}" y1="${MARGIN.top}" x2="${MARGIN.left}" y2="${plotBottom}" stroke="black"/>`,
    `<text x="${(MARGIN.left + plotRight) / 2}" y="${HEIGHT - 12}" text-anchor="middle">clique number</text>`,
    `<text x="18" y="${(MARGIN.top + plotBottom) / 2}" text-anchor="middle" transform="rotate(-90 18 ${(MARGIN.top + plotBottom) / 2})">experiments</text>`,
  );

  // reference curves
  for (const series of REFERENCE_SERIES) {
    const points = curves
      .filter((row) => typeof row[series.key] === "number")
      .map((row) => `${x(row.chi).toFixed(1)},${y(row[series.key] as number).toFixed(1)}`);
    if (points.length === 0) {
      continue;
    }
    const dash = series.dash ? ` stroke-dasharray="${series.dash}"` : "";
    parts.push(
      `<polyline points="${points.join(" ")}" fill="none" stroke="${series.color}" stroke-width="1.6"${dash} data-series="${esc(series.label)}"/>`,
    );
  }

  // strategy scatter plus bucket means
  for (const strategy of strategies) {
    const style = STRATEGY_STYLE[strategy] ?? { color: "#7f7f7f", marker: "circle" as const };
    const trials = results.filter((r) => r.strategy === strategy);
    const scatter = trials
      .map((t) => marker(style.marker, x(t.chi), y(t.interventions_used), 2.5, style.color, 0.25))
      .join("");
    const means = bucketMeans(trials)
      .map((b) => marker(style.marker, x(b.chi), y(b.mean), 5, style.color, 1))
      .join("");
    parts.push(`<g data-series="${esc(strategy)}">${scatter}${means}</g>`);
  }

  // legend
  let legendY = MARGIN.top + 10;
  const legendX = plotRight + 16;
  for (const series of REFERENCE_SERIES) {
    const dash = series.dash ? ` stroke-dasharray="${series.dash}"` : "";
    parts.push(
      `<line x1="${legendX}" y1="${legendY - 4}" x2="${legendX + 26}" y2="${legendY - 4}" stroke="${series.color}" stroke-width="1.6"${dash}/>`,
      `<text x="${legendX + 32}" y="${legendY}">${esc(series.label)}</text>`,
    );
    legendY += 20;
  }
  for (const strategy of strategies) {
    const style = STRATEGY_STYLE[strategy] ?? { color: "#7f7f7f", marker: "circle" as const };
    parts.push(
      marker(style.marker, legendX + 13, legendY - 4, 5, style.color, 1),
      `<text x="${legendX + 32}" y="${legendY}">${esc(strategy)}</text>`,
    );
    legendY += 20;
  }

  parts.push("</svg>");
  return parts.join("\n");
}
