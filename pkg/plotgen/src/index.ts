export { render, bucketMeans, REFERENCE_SERIES } from "./chart.js";
export {
  CURVE_COLUMNS,
  RESULT_COLUMNS,
  SchemaError,
  parseCurves,
  parseResults,
} from "./schema.js";
export type { CurveRow, TrialRow } from "./schema.js";
