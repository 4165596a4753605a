/** Let pending promise chains (fetch + render) settle. */
export async function flush(): Promise<void> {
  for (let i = 0; i < 5; i++) {
    await new Promise((resolve) => setTimeout(resolve, 0));
  }
}

export function click(node: Element): void {
  node.dispatchEvent(new MouseEvent("click", { bubbles: true }));
}

export function distance(
  node: Element,
  cx: number,
  cy: number,
): number {
  const x = Number(node.getAttribute("cx"));
  const y = Number(node.getAttribute("cy"));
  return Math.hypot(x - cx, y - cy);
}
