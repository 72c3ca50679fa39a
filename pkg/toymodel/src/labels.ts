/**
 * Tag label sets for each table scheme.
 *
 * 3d labels combine three role dimensions `{N,A}-{N,O}-{N,NEG,NEU,POS}`;
 * 2d merges the term dimensions into `{N,O,A}-{N,NEG,NEU,POS}`; 1d is a
 * single label from `{N,NEG,NEU,POS,O,A}`. The all-N label of each scheme
 * is the default "no role" class.
 */

export type Scheme = "3d" | "2d" | "1d";

export const SCHEMES: Scheme[] = ["3d", "2d", "1d"];

const SENTIMENTS = ["N", "NEG", "NEU", "POS"];

export function labelSet(scheme: Scheme): string[] {
  const labels: string[] = [];
  if (scheme === "3d") {
    for (const a of ["N", "A"]) {
      for (const o of ["N", "O"]) {
        for (const s of SENTIMENTS) {
          labels.push(`${a}-${o}-${s}`);
        }
      }
    }
  } else if (scheme === "2d") {
    for (const t of ["N", "O", "A"]) {
      for (const s of SENTIMENTS) {
        labels.push(`${t}-${s}`);
      }
    }
  } else {
    labels.push("N", "NEG", "NEU", "POS", "O", "A");
  }
  return labels;
}

export function defaultLabel(scheme: Scheme): string {
  return scheme === "3d" ? "N-N-N" : scheme === "2d" ? "N-N" : "N";
}

export function parseScheme(raw: string): Scheme {
  if (raw === "3d" || raw === "2d" || raw === "1d") {
    return raw;
  }
  throw new Error(`unknown scheme ${JSON.stringify(raw)} (expected 3d, 2d or 1d)`);
}
