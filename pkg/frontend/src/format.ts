/**
 * Numbers are rendered exactly as the API sent them. The UI never rounds,
 * rescales or otherwise recomputes a metric; if a value looks wrong the
 * place to fix it is the pipeline, not here.
 */
export function fmt(value: number): string {
  return String(value);
}

export function signClass(value: number): string {
  return value > 0 ? "positive" : value < 0 ? "negative" : "zero";
}

/** Diverging red/gray/blue fill for mean sentiment in [-1, 1]. */
export function divergingColor(value: number): string {
  if (value === 0) return "rgb(128,128,128)";
  const t = Math.max(-1, Math.min(1, value));
  if (t > 0) {
    const g = Math.round(128 - 90 * t);
    return `rgb(${Math.round(40 * t)},${g + Math.round(70 * t)},${Math.round(128 + 100 * t)})`;
  }
  const s = -t;
  return `rgb(${Math.round(128 + 110 * s)},${Math.round(128 - 90 * s)},${Math.round(128 - 90 * s)})`;
}
