/**
 * Hashed span features.
 *
 * Each token hashes to one of `dim` buckets (seeded FNV-1a). A span's
 * feature vector concatenates three blocks: the start token's bucket, the
 * end token's bucket, and the summed buckets of every token inside the
 * span, so both boundary identity and whole-span content are visible to
 * the classifier.
 */

export interface SparseVec {
  indices: number[];
  values: number[];
}

const FNV_OFFSET = 0x811c9dc5;
const FNV_PRIME = 0x01000193;

export function hashToken(token: string, seed: number): number {
  let hash = (FNV_OFFSET ^ seed) >>> 0;
  for (let i = 0; i < token.length; i += 1) {
    hash ^= token.charCodeAt(i);
    hash = Math.imul(hash, FNV_PRIME) >>> 0;
  }
  return hash >>> 0;
}

export class SpanFeaturizer {
  readonly dim: number;
  readonly seed: number;

  constructor(dim = 512, seed = 1) {
    if (dim < 1) {
      throw new Error(`feature dim must be >= 1, got ${dim}`);
    }
    this.dim = dim;
    this.seed = seed;
  }

  /** Width of the concatenated feature space. */
  get width(): number {
    return 3 * this.dim;
  }

  bucket(token: string): number {
    return hashToken(token, this.seed) % this.dim;
  }

  features(tokens: string[], start: number, end: number): SparseVec {
    if (start < 0 || start > end || end >= tokens.length) {
      throw new Error(`bad span (${start}, ${end}) for ${tokens.length} tokens`);
    }
    const accum = new Map<number, number>();
    const add = (index: number, value: number) => {
      accum.set(index, (accum.get(index) ?? 0) + value);
    };
    add(this.bucket(tokens[start]), 1);
    add(this.dim + this.bucket(tokens[end]), 1);
    for (let k = start; k <= end; k += 1) {
      add(2 * this.dim + this.bucket(tokens[k]), 1);
    }
    const indices = [...accum.keys()].sort((a, b) => a - b);
    return { indices, values: indices.map((i) => accum.get(i)!) };
  }
}
