import { ApiClient } from "./api.js";
import { el } from "./dom.js";
import { BarsView } from "./views/bars.js";
import { RadialView } from "./views/radial.js";
import { TreemapView } from "./views/treemap.js";

interface Tab {
  id: string;
  label: string;
  activate: () => void;
}

/** Mount the three-tab explorer into `root`. */
export function mountApp(root: HTMLElement, api = new ApiClient()): void {
  const nav = el("nav", { class: "tabs" });
  const panels = el("div", { class: "panels" });
  root.appendChild(nav);
  root.appendChild(panels);

  const barsRoot = el("section", { class: "panel", id: "panel-context" });
  const treemapRoot = el("section", { class: "panel two-col", id: "panel-themes" });
  const radialRoot = el("section", { class: "panel two-col", id: "panel-keyword" });
  panels.appendChild(barsRoot);
  panels.appendChild(treemapRoot);
  panels.appendChild(radialRoot);

  const bars = new BarsView(barsRoot, api);
  const treemap = new TreemapView(treemapRoot, api);
  new RadialView(radialRoot, api);

  const tabs: Tab[] = [
    { id: "panel-context", label: "Context", activate: () => void bars.refresh() },
    { id: "panel-themes", label: "Themes", activate: () => void treemap.refresh() },
    { id: "panel-keyword", label: "Keyword", activate: () => undefined },
  ];

  const buttons = new Map<string, HTMLButtonElement>();
  const select = (tab: Tab) => {
    for (const panel of panels.children) {
      (panel as HTMLElement).style.display = panel.id === tab.id ? "" : "none";
    }
    for (const [id, button] of buttons) {
      button.classList.toggle("active", id === tab.id);
    }
    tab.activate();
  };

  for (const tab of tabs) {
    const button = el("button", { class: "tab", "data-panel": tab.id }, tab.label);
    button.addEventListener("click", () => select(tab));
    buttons.set(tab.id, button);
    nav.appendChild(button);
  }
  select(tabs[0]!);
}
