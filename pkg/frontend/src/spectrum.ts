/**
 * Media-bias spectrum scatter: x sentiment deviation, y coverage or mention
 * deviation, mark area by count, diverging color by mean sentiment. Axes
 * are linear and unnormalized; the plot adds nothing to the API numbers.
 */

import { divergingColor, fmt } from "./format.js";
import type { SpectrumPoint } from "./types.js";

const SVG_NS = "http://www.w3.org/2000/svg";
const WIDTH = 560;
const HEIGHT = 420;
const PAD = 48;

export interface SpectrumCallbacks {
  onPointClick: (newspaperId: string) => void;
}

function scale(values: number[], range: [number, number]): (v: number) => number {
  const lo = Math.min(0, ...values);
  const hi = Math.max(0, ...values);
  const span = hi - lo || 1;
  return (v) => range[0] + ((v - lo) / span) * (range[1] - range[0]);
}

export function renderSpectrum(
  container: HTMLElement,
  points: SpectrumPoint[],
  callbacks: SpectrumCallbacks,
): void {
  container.textContent = "";
  const svg = document.createElementNS(SVG_NS, "svg");
  svg.setAttribute("viewBox", `0 0 ${WIDTH} ${HEIGHT}`);
  svg.setAttribute("class", "spectrum");

  const sx = scale(points.map((p) => p.x), [PAD, WIDTH - PAD]);
  const sy = scale(points.map((p) => p.y), [HEIGHT - PAD, PAD]);
  const maxSize = Math.max(1, ...points.map((p) => p.size));

  for (const [from, to] of [
    [[sx(0), PAD], [sx(0), HEIGHT - PAD]],
    [[PAD, sy(0)], [WIDTH - PAD, sy(0)]],
  ] as const) {
    const axis = document.createElementNS(SVG_NS, "line");
    axis.setAttribute("x1", String(from[0]));
    axis.setAttribute("y1", String(from[1]));
    axis.setAttribute("x2", String(to[0]));
    axis.setAttribute("y2", String(to[1]));
    axis.setAttribute("class", "axis");
    svg.appendChild(axis);
  }

  for (const point of points) {
    const mark = document.createElementNS(SVG_NS, "circle");
    mark.setAttribute("class", "mark");
    mark.setAttribute("cx", String(sx(point.x)));
    mark.setAttribute("cy", String(sy(point.y)));
    mark.setAttribute("r", String(4 + 14 * Math.sqrt(point.size / maxSize)));
    mark.setAttribute("fill", divergingColor(point.color_value));
    mark.dataset.newspaper = point.newspaper_id;
    const tip = document.createElementNS(SVG_NS, "title");
    tip.textContent =
      `${point.newspaper_id}\n` +
      `sentiment deviation: ${fmt(point.x)}\n` +
      `coverage deviation: ${fmt(point.y)}\n` +
      `count: ${fmt(point.size)}\n` +
      `mean sentiment: ${fmt(point.color_value)}`;
    mark.appendChild(tip);
    mark.addEventListener("click", () =>
      callbacks.onPointClick(point.newspaper_id),
    );
    svg.appendChild(mark);
  }
  container.appendChild(svg);
}
