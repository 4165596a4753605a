import { afterEach, beforeEach, describe, expect, it, vi } from "vitest";

import { ApiClient } from "../src/api.js";
import { TreemapView } from "../src/views/treemap.js";
import { click, flush } from "./helpers.js";
import { installMockApi, type MockApi } from "./mockApi.js";

describe("theme treemap view", () => {
  let mock: MockApi;
  let root: HTMLElement;
  let view: TreemapView;

  beforeEach(() => {
    mock = installMockApi();
    root = document.createElement("div");
    document.body.appendChild(root);
    view = new TreemapView(root, new ApiClient());
  });

  afterEach(() => {
    document.body.removeChild(root);
    vi.unstubAllGlobals();
  });

  it("renders one cell per theme and one circle per node", async () => {
    await view.refresh();
    await flush();
    const cells = [...root.querySelectorAll("rect.cell")];
    expect(cells.map((c) => c.getAttribute("data-label")).sort()).toEqual([
      "salud",
      "servicios",
      "vivienda",
    ]);
    expect(root.querySelectorAll("circle.node")).toHaveLength(6);
    expect(root.querySelectorAll("circle.item-node")).toHaveLength(3);
    const i2 = root.querySelector("circle[data-id='I2']")!;
    expect(i2.getAttribute("fill")).toBe("#ff7f0e");
    expect(i2.querySelector("title")!.textContent).toBe(
      "Encuesta de salud (statistical operation)",
    );
  });

  it("populates the detail panel when an item node is clicked", async () => {
    await view.refresh();
    await flush();
    click(root.querySelector("circle[data-id='I1']")!);
    await flush();
    expect(root.querySelector(".detail-name")!.textContent).toBe(
      "Registro de créditos de vivienda",
    );
    expect(root.querySelector(".detail-kind")!.textContent).toBe(
      "administrative register",
    );
    expect(root.querySelector(".detail-objective")!.textContent).toBe(
      "créditos para vivienda y financiación de vivienda",
    );
    expect(root.querySelector(".detail-macro")!.textContent).toBe("Económica");
    expect(root.querySelector(".detail-new")!.textContent).toBe("vivienda");
    expect(mock.requests).toContain("/api/items/I1");
  });

  it("does not recompute layout client-side: positions come from the API", async () => {
    await view.refresh();
    await flush();
    const i1 = root.querySelector("circle[data-id='I1']")!;
    expect(Number(i1.getAttribute("cx"))).toBeCloseTo(710.1687245556647, 6);
    expect(Number(i1.getAttribute("cy"))).toBeCloseTo(219.96291408882269, 6);
  });

  it("shows keyword nodes in grey", async () => {
    await view.refresh();
    await flush();
    for (const node of root.querySelectorAll("circle.keyword-node")) {
      expect(node.getAttribute("fill")).toBe("#7f7f7f");
    }
  });
});
