import { ApiError, type ApiClient } from "../api.js";
import { clear, el, svgEl } from "../dom.js";
import { DetailPanel } from "./detail.js";
import {
  KEYWORD_COLOR,
  KIND_COLORS,
  kindLabel,
  type LayoutDoc,
  type NetworkDoc,
  type RankDoc,
} from "../types.js";

const NODE_RADIUS = 5;

/** Keyword tab: radial proximity layout around a queried keyword, with a
 * ranked match table.  The keyword comes from a text input; submitting an
 * empty query issues no request and shows a hint instead. */
export class RadialView {
  private readonly form: HTMLFormElement;
  private readonly input: HTMLInputElement;
  private readonly hint: HTMLParagraphElement;
  private readonly svg: SVGElement;
  private readonly table: HTMLTableElement;
  private readonly detail: DetailPanel;
  private network: NetworkDoc | null = null;
  private requestToken = 0;

  constructor(root: HTMLElement, private readonly api: ApiClient) {
    const main = el("div", { class: "view-main" });
    this.form = el("form", { class: "keyword-form" });
    this.input = el("input", {
      type: "text",
      name: "keyword",
      class: "keyword-input",
      placeholder: "keyword, e.g. salud",
    });
    const submit = el("button", { type: "submit" }, "Explore");
    this.form.appendChild(this.input);
    this.form.appendChild(submit);
    main.appendChild(this.form);

    this.hint = el("p", { class: "hint" });
    main.appendChild(this.hint);

    this.svg = svgEl("svg", {
      width: 960,
      height: 640,
      viewBox: "0 0 960 640",
      class: "radial-view",
    });
    main.appendChild(this.svg);

    this.table = el("table", { class: "rank-table" });
    main.appendChild(this.table);
    root.appendChild(main);

    const side = el("aside", { class: "detail-panel" });
    root.appendChild(side);
    this.detail = new DetailPanel(side, api);

    this.form.addEventListener("submit", (event) => {
      event.preventDefault();
      void this.submit();
    });
  }

  async submit(): Promise<void> {
    const keyword = this.input.value.trim();
    if (!keyword) {
      this.hint.textContent = "Enter a keyword to explore.";
      return;
    }
    this.hint.textContent = "";
    const token = ++this.requestToken;
    try {
      const [network, layout, rank] = await Promise.all([
        this.network ? Promise.resolve(this.network) : this.api.network(),
        this.api.layoutRadial(keyword),
        this.api.rank(keyword),
      ]);
      if (token !== this.requestToken) return; // superseded by a newer query
      this.network = network;
      this.renderLayout(network, layout);
      this.renderRank(rank);
    } catch (err) {
      if (token !== this.requestToken) return;
      if (err instanceof ApiError) {
        this.hint.textContent = err.message;
      } else {
        this.hint.textContent = err instanceof Error ? err.message : String(err);
      }
    }
  }

  private renderLayout(network: NetworkDoc, layout: LayoutDoc): void {
    clear(this.svg);
    const [cx, cy] = layout.center ?? [480, 320];
    for (const radius of layout.ring_radii ?? []) {
      this.svg.appendChild(
        svgEl("circle", {
          class: "ring",
          cx,
          cy,
          r: radius,
          fill: "none",
          stroke: "#ddd",
        }),
      );
    }
    const byId = new Map(network.nodes.map((n) => [n.id, n]));
    for (const pos of layout.positions) {
      const node = byId.get(pos.id);
      const isItem = node?.role === "item";
      const circle = svgEl("circle", {
        class: isItem ? "node item-node" : "node keyword-node",
        cx: pos.x,
        cy: pos.y,
        r: NODE_RADIUS,
        fill: isItem ? KIND_COLORS[node!.item_kind!] : KEYWORD_COLOR,
        "data-id": pos.id,
        "data-count": pos.match_count ?? "",
      });
      const tip = svgEl("title");
      tip.textContent = isItem
        ? `${node!.name} (${kindLabel(node!.item_kind!)})`
        : `keyword: ${node?.term ?? pos.id}`;
      circle.appendChild(tip);
      if (isItem) {
        circle.addEventListener("click", () => void this.detail.show(pos.id));
      }
      this.svg.appendChild(circle);
    }
  }

  private renderRank(rank: RankDoc): void {
    clear(this.table);
    const head = el("tr");
    for (const label of ["Matches", "Name", "Type"]) {
      head.appendChild(el("th", {}, label));
    }
    this.table.appendChild(head);
    for (const row of rank.rows) {
      const tr = el("tr", { "data-id": row.id });
      tr.appendChild(el("td", { class: "rank-count" }, String(row.count)));
      tr.appendChild(el("td", { class: "rank-name" }, row.name));
      tr.appendChild(el("td", { class: "rank-kind" }, kindLabel(row.item_kind)));
      tr.addEventListener("click", () => void this.detail.show(row.id));
      this.table.appendChild(tr);
    }
  }
}
