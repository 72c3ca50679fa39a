/**
 * Readers/writers for the two interchange formats of the spantag toolkit.
 *
 * The trainer only needs sentence tokens from corpus lines
 * (`<tokens>####<triplet-list>`) and span labels from tag-table files
 * (`#table <id> <n> <scheme>` headers with `<start> <end> <label>` cell
 * lines, tables separated by a blank line).
 */

import { Scheme, defaultLabel, labelSet, parseScheme } from "./labels";

export interface SentenceRec {
  id: string;
  tokens: string[];
}

export interface TagTableRec {
  id: string;
  n: number;
  scheme: Scheme;
  /** Non-default cells keyed `${start},${end}`. */
  cells: Map<string, string>;
}

export function cellKey(start: number, end: number): string {
  return `${start},${end}`;
}

export function parseCorpus(text: string): SentenceRec[] {
  const sentences: SentenceRec[] = [];
  const lines = text.split("\n");
  for (let i = 0; i < lines.length; i += 1) {
    const line = lines[i];
    if (line === "" && i === lines.length - 1) {
      continue; // trailing newline
    }
    const sep = line.indexOf("####");
    if (sep < 0) {
      throw new Error(`line ${i + 1}: missing '####' separator`);
    }
    const tokens = line.slice(0, sep).trim().split(" ");
    if (tokens.length === 0 || tokens.some((t) => t.length === 0)) {
      throw new Error(`line ${i + 1}: malformed tokens`);
    }
    sentences.push({ id: `s${i}`, tokens });
  }
  return sentences;
}

export function parseTagTables(text: string): TagTableRec[] {
  const tables: TagTableRec[] = [];
  let current: TagTableRec | null = null;
  const lines = text.split("\n");
  for (let i = 0; i < lines.length; i += 1) {
    const line = lines[i].trim();
    if (line === "") {
      current = null;
      continue;
    }
    if (line.startsWith("#table")) {
      const parts = line.split(" ");
      if (parts.length !== 4) {
        throw new Error(`line ${i + 1}: malformed table header`);
      }
      const n = Number(parts[2]);
      if (!Number.isInteger(n) || n < 1) {
        throw new Error(`line ${i + 1}: bad table length ${parts[2]}`);
      }
      current = { id: parts[1], n, scheme: parseScheme(parts[3]), cells: new Map() };
      tables.push(current);
      continue;
    }
    if (current === null) {
      throw new Error(`line ${i + 1}: cell before any #table header`);
    }
    const parts = line.split(" ");
    if (parts.length !== 3) {
      throw new Error(`line ${i + 1}: malformed cell line`);
    }
    const start = Number(parts[0]);
    const end = Number(parts[1]);
    if (
      !Number.isInteger(start) || !Number.isInteger(end) ||
      start < 0 || start > end || end >= current.n
    ) {
      throw new Error(`line ${i + 1}: bad span ${parts[0]} ${parts[1]}`);
    }
    if (!labelSet(current.scheme).includes(parts[2])) {
      throw new Error(
        `line ${i + 1}: label ${parts[2]} not in ${current.scheme} tag set`
      );
    }
    if (parts[2] !== defaultLabel(current.scheme)) {
      current.cells.set(cellKey(start, end), parts[2]);
    }
  }
  return tables;
}

/** Canonical text form: cells sorted by span, one blank line between tables. */
export function formatTagTables(tables: TagTableRec[]): string {
  const blocks = tables.map((table) => {
    const lines = [`#table ${table.id} ${table.n} ${table.scheme}`];
    const cells = [...table.cells.entries()]
      .map(([key, label]) => {
        const [start, end] = key.split(",").map(Number);
        return { start, end, label };
      })
      .sort((a, b) => a.start - b.start || a.end - b.end);
    for (const cell of cells) {
      lines.push(`${cell.start} ${cell.end} ${cell.label}`);
    }
    return lines.join("\n");
  });
  return blocks.length > 0 ? blocks.join("\n\n") + "\n" : "";
}
