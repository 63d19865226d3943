import { mkdtempSync, readFileSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";

import { describe, expect, it } from "vitest";

import { main } from "../src/cli.js";
import { curvesCsv, resultsCsv } from "./fixtures.js";

function workspace(): { results: string; curves: string; out: string } {
  const dir = mkdtempSync(join(tmpdir(), "plotgen-"));
  const results = join(dir, "results.csv");
  const curves = join(dir, "curves.csv");
  writeFileSync(results, resultsCsv());
  writeFileSync(curves, curvesCsv());
  return { results, curves, out: join(dir, "figure.svg") };
}

describe("main", () => {
  it("writes the chart and returns 0", () => {
    const paths = workspace();
    expect(main([paths.results, paths.curves, "-o", paths.out])).toBe(0);
    const svg = readFileSync(paths.out, "utf8");
    expect(svg).toContain("<svg");
    expect(svg).toContain("Information Theoretic LB");
  });

  it("returns 2 on a schema mismatch", () => {
    const paths = workspace();
    writeFileSync(paths.results, resultsCsv().replace("chi", "col"));
    expect(main([paths.results, paths.curves, "-o", paths.out])).toBe(2);
  });

  it("returns 1 when an input file is missing", () => {
    const paths = workspace();
    expect(main([paths.results + ".nope", paths.curves, "-o", paths.out])).toBe(1);
  });
});
