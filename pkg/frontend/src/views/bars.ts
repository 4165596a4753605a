import type { ApiClient } from "../api.js";
import { clear, el, svgEl } from "../dom.js";
import { KIND_COLORS, type SummaryDoc } from "../types.js";

const CHART_WIDTH = 440;
const CHART_HEIGHT = 280;
const MARGIN = { top: 10, right: 10, bottom: 60, left: 36 };

interface Series {
  title: string;
  color: string;
  rows: { label: string; count: number }[];
}

function renderChart(series: Series): SVGElement {
  const svg = svgEl("svg", {
    width: CHART_WIDTH,
    height: CHART_HEIGHT,
    viewBox: `0 0 ${CHART_WIDTH} ${CHART_HEIGHT}`,
    class: "bar-chart",
  });
  const plotW = CHART_WIDTH - MARGIN.left - MARGIN.right;
  const plotH = CHART_HEIGHT - MARGIN.top - MARGIN.bottom;
  const maxCount = Math.max(1, ...series.rows.map((r) => r.count));
  const band = plotW / Math.max(1, series.rows.length);
  const barW = band * 0.8;

  const title = svgEl("text", {
    x: MARGIN.left,
    y: MARGIN.top + 10,
    class: "chart-title",
  });
  title.textContent = series.title;
  svg.appendChild(title);

  series.rows.forEach((row, i) => {
    const h = (row.count / maxCount) * plotH;
    const x = MARGIN.left + i * band + (band - barW) / 2;
    const y = MARGIN.top + plotH - h;
    const bar = svgEl("rect", {
      class: "bar",
      x,
      y,
      width: barW,
      height: h,
      fill: series.color,
      "data-label": row.label,
      "data-value": row.count,
    });
    const tip = svgEl("title");
    tip.textContent = `${row.label}: ${row.count}`;
    bar.appendChild(tip);
    svg.appendChild(bar);

    const label = svgEl("text", {
      class: "bar-label",
      x: x + barW / 2,
      y: MARGIN.top + plotH + 12,
      "text-anchor": "end",
      transform: `rotate(-35 ${x + barW / 2} ${MARGIN.top + plotH + 12})`,
    });
    label.textContent = row.label;
    svg.appendChild(label);
  });

  svg.appendChild(
    svgEl("line", {
      class: "axis",
      x1: MARGIN.left,
      y1: MARGIN.top + plotH,
      x2: MARGIN.left + plotW,
      y2: MARGIN.top + plotH,
      stroke: "#333",
    }),
  );
  return svg;
}

function toSeries(doc: SummaryDoc): Series[] {
  if (doc.rows_registers && doc.rows_operations) {
    return [
      {
        title: "Administrative registers",
        color: KIND_COLORS.administrative_register,
        rows: doc.rows_registers,
      },
      {
        title: "Statistical operations",
        color: KIND_COLORS.statistical_operation,
        rows: doc.rows_operations,
      },
    ];
  }
  return [
    {
      title: "Administrative registers",
      color: KIND_COLORS.administrative_register,
      rows: doc.rows.map((r) => ({ label: r.label, count: r.registers })),
    },
    {
      title: "Statistical operations",
      color: KIND_COLORS.statistical_operation,
      rows: doc.rows.map((r) => ({ label: r.label, count: r.operations })),
    },
  ];
}

/** Context tab: side-by-side bar charts of item counts per theme label. */
export class BarsView {
  private readonly charts: HTMLDivElement;
  private readonly groupSelect: HTMLSelectElement;
  private readonly orderSelect: HTMLSelectElement;
  private readonly status: HTMLParagraphElement;

  constructor(
    root: HTMLElement,
    private readonly api: ApiClient,
  ) {
    const controls = el("div", { class: "controls" });
    this.groupSelect = el("select", { class: "group-by" });
    for (const [value, label] of [
      ["macro", "Macro theme"],
      ["sub", "Sub theme"],
      ["new", "Derived theme"],
    ]) {
      this.groupSelect.appendChild(el("option", { value }, label));
    }
    this.orderSelect = el("select", { class: "order" });
    for (const [value, label] of [
      ["natural", "Source order"],
      ["desc_total", "Total, descending"],
      ["desc_registers", "Registers, descending"],
      ["desc_operations", "Operations, descending"],
      ["independent", "Each kind separately"],
    ]) {
      this.orderSelect.appendChild(el("option", { value }, label));
    }
    controls.appendChild(this.groupSelect);
    controls.appendChild(this.orderSelect);
    root.appendChild(controls);
    this.status = el("p", { class: "status" });
    root.appendChild(this.status);
    this.charts = el("div", { class: "charts" });
    root.appendChild(this.charts);

    this.groupSelect.addEventListener("change", () => void this.refresh());
    this.orderSelect.addEventListener("change", () => void this.refresh());
  }

  async refresh(): Promise<void> {
    this.status.textContent = "";
    try {
      const doc = await this.api.summary(
        this.groupSelect.value,
        this.orderSelect.value,
      );
      clear(this.charts);
      for (const series of toSeries(doc)) {
        this.charts.appendChild(renderChart(series));
      }
    } catch (err) {
      this.status.textContent = err instanceof Error ? err.message : String(err);
      this.status.classList.add("error");
    }
  }
}
