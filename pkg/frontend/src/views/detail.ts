import type { ApiClient } from "../api.js";
import { clear, el } from "../dom.js";
import { kindLabel } from "../types.js";

/** Side panel showing one item's descriptive fields and keyword weights. */
export class DetailPanel {
  private readonly body: HTMLDivElement;

  constructor(root: HTMLElement, private readonly api: ApiClient) {
    root.appendChild(el("h3", {}, "Item detail"));
    this.body = el("div", { class: "detail-body" });
    this.body.appendChild(
      el("p", { class: "placeholder" }, "Select an item to see its details."),
    );
    root.appendChild(this.body);
  }

  async show(itemId: string): Promise<void> {
    try {
      const detail = await this.api.item(itemId);
      clear(this.body);
      this.body.appendChild(el("h4", { class: "detail-name" }, detail.name));
      const list = el("dl", { class: "detail-fields" });
      const fields: [string, string, string][] = [
        ["detail-kind", "Type", kindLabel(detail.item_kind)],
        ["detail-macro", "Macro theme", detail.macro_theme],
        ["detail-sub", "Sub theme", detail.sub_theme],
        ["detail-new", "Derived theme", detail.new_theme],
        ["detail-objective", "Objective", detail.objective],
      ];
      for (const [cls, label, value] of fields) {
        list.appendChild(el("dt", {}, label));
        list.appendChild(el("dd", { class: cls }, value));
      }
      this.body.appendChild(list);
      if (detail.keywords.length) {
        const kw = el("ul", { class: "detail-keywords" });
        for (const entry of detail.keywords) {
          kw.appendChild(
            el("li", { "data-term": entry.term }, `${entry.term} (${entry.weight})`),
          );
        }
        this.body.appendChild(kw);
      }
    } catch (err) {
      clear(this.body);
      const msg = err instanceof Error ? err.message : String(err);
      this.body.appendChild(el("p", { class: "error" }, msg));
    }
  }
}
