import { describe, expect, it } from "vitest";

import { divergingColor } from "../src/format.js";
import { renderSpectrum } from "../src/spectrum.js";
import type { SpectrumPoint } from "../src/types.js";
import { container, fixture } from "./helpers.js";

const points = fixture<SpectrumPoint[]>("spectrum_title");

describe("spectrum view", () => {
  it("renders one mark per API point", () => {
    const host = container();
    renderSpectrum(host, points, { onPointClick: () => undefined });
    expect(host.querySelectorAll(".mark").length).toBe(points.length);
  });

  it("hover detail carries the API numbers verbatim", () => {
    const host = container();
    renderSpectrum(host, points, { onPointClick: () => undefined });
    const marks = [...host.querySelectorAll(".mark")];
    for (const point of points) {
      const mark = marks.find(
        (m) => (m as SVGElement).dataset.newspaper === point.newspaper_id,
      )!;
      const tip = mark.querySelector("title")!.textContent!;
      expect(tip).toContain(`sentiment deviation: ${String(point.x)}`);
      expect(tip).toContain(`coverage deviation: ${String(point.y)}`);
      expect(tip).toContain(`count: ${String(point.size)}`);
      expect(tip).toContain(`mean sentiment: ${String(point.color_value)}`);
    }
  });

  it("click reports the newspaper behind the mark", () => {
    const host = container();
    const clicked: string[] = [];
    renderSpectrum(host, points, { onPointClick: (np) => clicked.push(np) });
    const mark = host.querySelector(".mark") as SVGElement;
    mark.dispatchEvent(new Event("click"));
    expect(clicked).toEqual([mark.dataset.newspaper]);
  });

  it("diverging color flips family at zero", () => {
    const positive = divergingColor(0.5);
    const negative = divergingColor(-0.5);
    const [pr, , pb] = rgb(positive);
    const [nr, , nb] = rgb(negative);
    expect(pb).toBeGreaterThan(pr); // blue side
    expect(nr).toBeGreaterThan(nb); // red side
  });
});

function rgb(color: string): [number, number, number] {
  const match = color.match(/rgb\((\d+),(\d+),(\d+)\)/)!;
  return [Number(match[1]), Number(match[2]), Number(match[3])];
}
