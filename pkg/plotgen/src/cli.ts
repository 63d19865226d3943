/**
 * plotgen <results.csv> <curves.csv> -o <figure.svg>
 *
 * Reads the benchmark results and bound-curve CSVs and writes an SVG chart.
 * Exits with status 2 on a schema mismatch (message names the bad column)
 * and 1 on usage or I/O errors.
 */

import { readFileSync, writeFileSync } from "node:fs";

import { render } from "./chart.js";
import { SchemaError, parseCurves, parseResults } from "./schema.js";

function usage(): never {
  process.stderr.write(
    "usage: plotgen <results.csv> <curves.csv> -o <figure.svg>\n",
  );
  process.exit(1);
}

export function main(argv: string[]): number {
  const positional: string[] = [];
  let out: string | undefined;
  for (let i = 0; i < argv.length; i++) {
    const arg = argv[i]!;
    if (arg === "-o" || arg === "--out") {
      out = argv[++i];
    } else if (arg.startsWith("-")) {
      usage();
    } else {
      positional.push(arg);
    }
  }
  if (positional.length !== 2 || out === undefined) {
    usage();
  }
  const [resultsPath, curvesPath] = positional as [string, string];

  let resultsText: string;
  let curvesText: string;
  try {
    resultsText = readFileSync(resultsPath, "utf8");
    curvesText = readFileSync(curvesPath, "utf8");
  } catch (error) {
    process.stderr.write(`plotgen: ${(error as Error).message}\n`);
    return 1;
  }

  try {
    const results = parseResults(resultsText);
    const curves = parseCurves(curvesText);
    writeFileSync(out, render(results, curves));
  } catch (error) {
    if (error instanceof SchemaError) {
      process.stderr.write(`plotgen: ${error.message}\n`);
      return 2;
    }
    throw error;
  }
  process.stdout.write(`wrote ${out}\n`);
  return 0;
}
