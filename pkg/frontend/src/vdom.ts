/** Minimal virtual DOM: the whole UI is built as plain trees so a rendered
 * view can be compared structurally (replay determinism) and mounted in a
 * real browser without a framework. */

export type Attrs = Record<string, string | number | boolean>;
export type Child = VNode | string;

export interface VNode {
  tag: string;
  attrs: Attrs;
  children: Child[];
}

export function h(tag: string, attrs: Attrs = {}, ...children: (Child | Child[] | null)[]): VNode {
  const flat: Child[] = [];
  for (const c of children) {
    if (c === null) continue;
    if (Array.isArray(c)) flat.push(...c);
    else flat.push(c);
  }
  return { tag, attrs, children: flat };
}

const escapes: Record<string, string> = {
  "&": "&amp;", "<": "&lt;", ">": "&gt;", '"': "&quot;",
};

function escape(text: string): string {
  return text.replace(/[&<>"]/g, (ch) => escapes[ch]);
}

export function renderToString(node: Child): string {
  if (typeof node === "string") return escape(node);
  const attrs = Object.entries(node.attrs)
    .map(([k, v]) => ` ${k}="${escape(String(v))}"`)
    .join("");
  const inner = node.children.map(renderToString).join("");
  return `<${node.tag}${attrs}>${inner}</${node.tag}>`;
}

const SVG_TAGS = new Set([
  "svg", "g", "rect", "circle", "line", "path", "polygon", "polyline", "text",
]);

/** Create real DOM from a tree (browser only). */
export function toDom(node: Child, doc: Document): Node {
  if (typeof node === "string") return doc.createTextNode(node);
  const el = SVG_TAGS.has(node.tag)
    ? doc.createElementNS("http://www.w3.org/2000/svg", node.tag)
    : doc.createElement(node.tag);
  for (const [key, value] of Object.entries(node.attrs)) {
    el.setAttribute(key, String(value));
  }
  for (const child of node.children) el.appendChild(toDom(child, doc));
  return el;
}
