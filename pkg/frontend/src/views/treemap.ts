import type { ApiClient } from "../api.js";
import { clear, el, svgEl } from "../dom.js";
import { DetailPanel } from "./detail.js";
import {
  KEYWORD_COLOR,
  KIND_COLORS,
  kindLabel,
  type LayoutDoc,
  type NetworkDoc,
} from "../types.js";

const NODE_RADIUS = 5;

/** Themes tab: treemap cells with the force-placed nodes inside, plus a
 * detail panel fed by clicking an item node. */
export class TreemapView {
  private readonly svg: SVGElement;
  private readonly status: HTMLParagraphElement;
  private readonly detail: DetailPanel;
  private network: NetworkDoc | null = null;
  private lastPositions: Map<string, { x: number; y: number }> | null = null;

  constructor(root: HTMLElement, private readonly api: ApiClient) {
    const main = el("div", { class: "view-main" });
    this.status = el("p", { class: "status" });
    main.appendChild(this.status);
    this.svg = svgEl("svg", {
      width: 960,
      height: 640,
      viewBox: "0 0 960 640",
      class: "treemap-view",
    });
    main.appendChild(this.svg);
    root.appendChild(main);

    const side = el("aside", { class: "detail-panel" });
    root.appendChild(side);
    this.detail = new DetailPanel(side, api);
  }

  async refresh(): Promise<void> {
    this.status.textContent = "";
    try {
      const [network, layout] = await Promise.all([
        this.network ? Promise.resolve(this.network) : this.api.network(),
        this.api.layoutGrouped(),
      ]);
      this.network = network;
      this.render(network, layout);
    } catch (err) {
      this.status.textContent = err instanceof Error ? err.message : String(err);
      this.status.classList.add("error");
    }
  }

  private render(network: NetworkDoc, layout: LayoutDoc): void {
    clear(this.svg);
    for (const cell of layout.cells ?? []) {
      this.svg.appendChild(
        svgEl("rect", {
          class: "cell",
          x: cell.x,
          y: cell.y,
          width: cell.w,
          height: cell.h,
          fill: "none",
          stroke: "#999",
          "data-label": cell.label,
        }),
      );
      const label = svgEl("text", {
        class: "cell-label",
        x: cell.x + 4,
        y: cell.y + 14,
      });
      label.textContent = cell.label;
      this.svg.appendChild(label);
    }

    const byId = new Map(network.nodes.map((n) => [n.id, n]));
    const previous = this.lastPositions;
    const next = new Map<string, { x: number; y: number }>();
    for (const pos of layout.positions) {
      const node = byId.get(pos.id);
      const isItem = node?.role === "item";
      const circle = svgEl("circle", {
        class: isItem ? "node item-node" : "node keyword-node",
        cx: pos.x,
        cy: pos.y,
        r: NODE_RADIUS,
        fill: isItem
          ? KIND_COLORS[node!.item_kind!]
          : KEYWORD_COLOR,
        "data-id": pos.id,
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
      next.set(pos.id, { x: pos.x, y: pos.y });
      const from = previous?.get(pos.id);
      if (from) animateCircle(circle as SVGCircleElement, from, pos);
    }
    this.lastPositions = next;
  }
}

/** Ease a circle from its previous coordinates to the new ones.  Skipped
 * entirely on first render so the view is usable synchronously. */
function animateCircle(
  circle: SVGCircleElement,
  from: { x: number; y: number },
  to: { x: number; y: number },
  duration = 300,
): void {
  if (typeof requestAnimationFrame !== "function") return;
  const start = performance.now();
  const step = (now: number) => {
    const t = Math.min(1, (now - start) / duration);
    const ease = t * (2 - t);
    circle.setAttribute("cx", String(from.x + (to.x - from.x) * ease));
    circle.setAttribute("cy", String(from.y + (to.y - from.y) * ease));
    if (t < 1) requestAnimationFrame(step);
  };
  circle.setAttribute("cx", String(from.x));
  circle.setAttribute("cy", String(from.y));
  requestAnimationFrame(step);
}
