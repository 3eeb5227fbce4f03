/**
 * Bubble map of newspaper headquarters: radius is the magnitude of the
 * publishing-rate deviation, color the mean sentiment. Negative deviations
 * render hollow, positive ones filled.
 */

import { divergingColor, fmt } from "./format.js";
import type { MapResponse } from "./types.js";

const SVG_NS = "http://www.w3.org/2000/svg";
const WIDTH = 560;
const HEIGHT = 300;

export function project(lat: number, lon: number): { x: number; y: number } {
  return {
    x: ((lon + 180) / 360) * WIDTH,
    y: ((90 - lat) / 180) * HEIGHT,
  };
}

export function renderMap(container: HTMLElement, data: MapResponse): void {
  container.textContent = "";
  const svg = document.createElementNS(SVG_NS, "svg");
  svg.setAttribute("viewBox", `0 0 ${WIDTH} ${HEIGHT}`);
  svg.setAttribute("class", "worldmap");

  const frame = document.createElementNS(SVG_NS, "rect");
  frame.setAttribute("width", String(WIDTH));
  frame.setAttribute("height", String(HEIGHT));
  frame.setAttribute("class", "map-frame");
  svg.appendChild(frame);

  const maxDev = Math.max(1e-9, ...data.points.map((p) => Math.abs(p.size_value)));
  for (const point of data.points) {
    const { x, y } = project(point.latitude, point.longitude);
    const mark = document.createElementNS(SVG_NS, "circle");
    mark.setAttribute("class", "map-mark");
    mark.setAttribute("cx", String(x));
    mark.setAttribute("cy", String(y));
    mark.setAttribute(
      "r",
      String(3 + 16 * Math.sqrt(Math.abs(point.size_value) / maxDev)),
    );
    const color = divergingColor(point.color_value);
    if (point.size_value < 0) {
      mark.setAttribute("fill", "none"); // hollow: publishes less than average
      mark.setAttribute("stroke", color);
      mark.setAttribute("stroke-width", "2");
    } else {
      mark.setAttribute("fill", color);
    }
    mark.dataset.newspaper = point.newspaper_id;
    const tip = document.createElementNS(SVG_NS, "title");
    tip.textContent =
      `${point.newspaper_id}\n` +
      `rate deviation: ${fmt(point.size_value)}\n` +
      `mean sentiment: ${fmt(point.color_value)}`;
    mark.appendChild(tip);
    svg.appendChild(mark);
  }
  container.appendChild(svg);

  if (data.newspapers_without_coordinates > 0) {
    const note = document.createElement("div");
    note.className = "map-note";
    note.textContent =
      `${fmt(data.newspapers_without_coordinates)} newspapers without coordinates not shown`;
    container.appendChild(note);
  }
}
