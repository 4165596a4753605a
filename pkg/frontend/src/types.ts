// Wire types for the analysis API (schema_version 1).

export type ItemKind = "administrative_register" | "statistical_operation";

export interface NetworkNode {
  id: string;
  role: "item" | "keyword";
  name?: string;
  item_kind?: ItemKind;
  term?: string;
  frequency?: number;
}

export interface NetworkDoc {
  schema_version: number;
  kind: "network";
  nodes: NetworkNode[];
  links: { item: string; keyword: string; weight: number }[];
  themes?: Record<string, string>;
}

export interface SummaryRow {
  label: string;
  registers: number;
  operations: number;
}

export interface SummaryDoc {
  schema_version: number;
  kind: "summary";
  grouping: string;
  order_mode: string;
  rows: SummaryRow[];
  rows_registers?: { label: string; count: number }[];
  rows_operations?: { label: string; count: number }[];
}

export interface LayoutPosition {
  id: string;
  x: number;
  y: number;
  cell?: string;
  target_radius?: number;
  match_count?: number;
}

export interface LayoutDoc {
  schema_version: number;
  kind: "layout";
  layout: "grouped_treemap" | "radial" | "plain_force";
  params: Record<string, unknown>;
  positions: LayoutPosition[];
  cells?: { label: string; x: number; y: number; w: number; h: number; weight: number }[];
  center?: [number, number];
  ring_radii?: [number, number, number];
}

export interface RankDoc {
  schema_version: number;
  kind: "rank";
  keyword: string;
  rows: { id: string; name: string; item_kind: ItemKind; count: number }[];
}

export interface ItemDetailDoc {
  schema_version: number;
  kind: "item_detail";
  id: string;
  name: string;
  item_kind: ItemKind;
  macro_theme: string;
  sub_theme: string;
  new_theme: string;
  objective: string;
  metadata: Record<string, string>;
  keywords: { term: string; weight: number }[];
}

export const KIND_COLORS: Record<ItemKind, string> = {
  administrative_register: "#1f77b4",
  statistical_operation: "#ff7f0e",
};

export const KEYWORD_COLOR = "#7f7f7f";

export function kindLabel(kind: ItemKind): string {
  return kind === "administrative_register"
    ? "administrative register"
    : "statistical operation";
}
