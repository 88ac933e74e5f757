import { describe, expect, it } from "vitest";

import { SchemeDocument } from "../src/api.js";
import { maskText, regularityDelta, schemeView, titleOf } from "../src/view.js";

import pseudo331 from "./fixtures/scheme_pseudo_3_3_1.json";
import pseudo221 from "./fixtures/scheme_pseudo_2_2_1.json";
import tension21 from "./fixtures/scheme_tension_2_1.json";

const doc331 = pseudo331 as unknown as SchemeDocument;
const doc221 = pseudo221 as unknown as SchemeDocument;
const docTension = tension21 as unknown as SchemeDocument;

describe("mask text", () => {
  it("writes signed monomials and skips zeros", () => {
    expect(maskText(["-4/3", "11/3", "-4/3"], -1)).toBe("-4/3 z^-1 + 11/3 - 4/3 z");
    expect(maskText(["1", "0", "1"], 0)).toBe("1 + 1 z^2");
    expect(maskText(["0"], 5)).toBe("0");
  });
});

describe("scheme view", () => {
  it("passes the display string through untouched", () => {
    expect(schemeView(doc331).regularity).toBe("1.81734");
    expect(schemeView(doc221).regularity).toBe("1.19265");
    expect(schemeView(docTension).regularity).toBe("2.00000");
  });

  it("renders the certified numbers from the report", () => {
    const view = schemeView(doc331);
    expect(view.certainty).toBe("exact");
    expect(view.rho).toBe("11/3");
    expect(view.tau).toBe("4");
    expect(view.support).toBe("[-5/2, 5/2]");
    expect(view.foldedRows).toEqual([["11/3"]]);
  });

  it("summarizes the parameters in the title", () => {
    expect(titleOf(doc331)).toContain("m=3");
    expect(titleOf(doc331)).toContain("n=3");
    expect(titleOf(docTension)).toContain("ω=1");
  });
});

describe("comparison delta", () => {
  it("is the difference of the service floats, five decimals", () => {
    expect(regularityDelta(doc331, doc221)).toBe("+0.62470");
    expect(regularityDelta(doc221, doc331)).toBe("-0.62470");
    expect(regularityDelta(doc331, doc331)).toBe("+0.00000");
  });

  it("degrades to n/a when a side is uncertified", () => {
    const broken = {
      ...doc331,
      regularity: { ...doc331.regularity, regularity: null },
    } as SchemeDocument;
    expect(regularityDelta(broken, doc221)).toBe("n/a");
  });
});
