/** End-to-end parity through the client pipeline against frozen service
 * bodies: what the readout shows must be the service's display string,
 * byte for byte.
 */

import { describe, expect, it } from "vitest";

import { ApiClient, FetchLike, SchemeDocument } from "../src/api.js";
import { RequestGate } from "../src/gate.js";
import { ParamSet, queryOf } from "../src/state.js";
import { schemeView } from "../src/view.js";

import pseudo331 from "./fixtures/scheme_pseudo_3_3_1.json";
import pseudo221 from "./fixtures/scheme_pseudo_2_2_1.json";
import tension21 from "./fixtures/scheme_tension_2_1.json";
import hat from "./fixtures/scheme_pseudo_2_1_0.json";

const fixtures: Record<string, unknown> = {
  "/api/scheme?family=pseudo&m=3&n=3&lprime=1": pseudo331,
  "/api/scheme?family=pseudo&m=2&n=2&lprime=1": pseudo221,
  "/api/scheme?family=tension&m=2&omega=1": tension21,
  "/api/scheme?family=pseudo&m=2&n=1&lprime=0": hat,
};

const offlineFetch: FetchLike = async (url) => {
  const body = fixtures[url];
  if (body === undefined) {
    return { ok: false, status: 404, json: async () => ({ error: `no fixture for ${url}` }) };
  }
  return { ok: true, status: 200, json: async () => body };
};

function readoutFor(params: ParamSet): Promise<string> {
  const api = new ApiClient("", offlineFetch);
  return new Promise((resolve, reject) => {
    const gate = new RequestGate<Record<string, string>, SchemeDocument>(
      (q) => api.scheme(q),
      (doc) => resolve(schemeView(doc).regularity),
      (error) => reject(error),
      0,
    );
    gate.flush(queryOf(params));
  });
}

describe("explorer parity with the service", () => {
  const cases: [ParamSet, string][] = [
    [{ family: "pseudo", m: 3, n: 3, lprime: 1, omegaNum: 0 }, "1.81734"],
    [{ family: "pseudo", m: 2, n: 2, lprime: 1, omegaNum: 0 }, "1.19265"],
    [{ family: "tension", m: 2, n: 3, lprime: 1, omegaNum: 64 }, "2.00000"],
  ];

  for (const [params, expected] of cases) {
    it(`shows ${expected} for ${params.family} m=${params.m}`, async () => {
      expect(await readoutFor(params)).toBe(expected);
    });
  }

  it("shows the strings exactly as the service sent them", () => {
    expect(schemeView(pseudo331 as unknown as SchemeDocument).regularity).toBe(
      (pseudo331 as { display: string }).display,
    );
    expect(schemeView(tension21 as unknown as SchemeDocument).regularity).toBe(
      (tension21 as { display: string }).display,
    );
  });

  it("shows the hat scheme as exactly 1", async () => {
    const shown = await readoutFor({ family: "pseudo", m: 2, n: 1, lprime: 0, omegaNum: 0 });
    expect(shown).toBe("1.00000");
  });
});
