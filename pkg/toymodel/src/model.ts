/**
 * Linear softmax span classifier.
 *
 * Every enumerated span up to the length cap is one training example; its
 * class is the span's tag-table label (the all-N default included). The
 * loss is cross-entropy summed over spans, minimized with plain gradient
 * descent. The model file is a small versioned binary.
 */

import { SentenceRec, TagTableRec, cellKey } from "./corpus";
import { SpanFeaturizer, SparseVec } from "./features";
import { Scheme, defaultLabel, labelSet } from "./labels";

export interface Hyperparams {
  epochs: number;
  learningRate: number;
  cap: number;
  dim: number;
  seed: number;
}

export const DEFAULT_HYPERPARAMS: Hyperparams = {
  epochs: 1500,
  learningRate: 0.5,
  cap: 8,
  dim: 512,
  seed: 1,
};

export interface Example {
  vec: SparseVec;
  label: number;
}

const MAGIC = "STM1";
const VERSION = 1;

export function softmax(logits: Float64Array): Float64Array {
  let max = -Infinity;
  for (const v of logits) {
    max = Math.max(max, v);
  }
  const out = new Float64Array(logits.length);
  let total = 0;
  for (let i = 0; i < logits.length; i += 1) {
    out[i] = Math.exp(logits[i] - max);
    total += out[i];
  }
  for (let i = 0; i < out.length; i += 1) {
    out[i] /= total;
  }
  return out;
}

export class SpanClassifier {
  readonly scheme: Scheme;
  readonly labels: string[];
  readonly featurizer: SpanFeaturizer;
  readonly cap: number;
  readonly weights: Float64Array; // classes x featurizer.width, row-major
  readonly bias: Float64Array;

  constructor(
    scheme: Scheme,
    featurizer: SpanFeaturizer,
    cap: number,
    weights?: Float64Array,
    bias?: Float64Array,
  ) {
    this.scheme = scheme;
    this.labels = labelSet(scheme);
    this.featurizer = featurizer;
    this.cap = cap;
    this.weights = weights ?? new Float64Array(this.labels.length * featurizer.width);
    this.bias = bias ?? new Float64Array(this.labels.length);
    if (this.weights.length !== this.labels.length * featurizer.width) {
      throw new Error("weight matrix shape mismatch");
    }
  }

  logits(vec: SparseVec): Float64Array {
    const out = new Float64Array(this.labels.length);
    const width = this.featurizer.width;
    for (let c = 0; c < out.length; c += 1) {
      let score = this.bias[c];
      const row = c * width;
      for (let i = 0; i < vec.indices.length; i += 1) {
        score += this.weights[row + vec.indices[i]] * vec.values[i];
      }
      out[c] = score;
    }
    return out;
  }

  probabilities(vec: SparseVec): Float64Array {
    return softmax(this.logits(vec));
  }

  predictLabel(vec: SparseVec): string {
    const probs = this.probabilities(vec);
    let best = 0;
    for (let c = 1; c < probs.length; c += 1) {
      if (probs[c] > probs[best]) {
        best = c;
      }
    }
    return this.labels[best];
  }

  /** One gradient-descent pass per epoch; returns the mean loss history. */
  train(examples: Example[], epochs: number, learningRate: number): number[] {
    const width = this.featurizer.width;
    const history: number[] = [];
    for (let epoch = 0; epoch < epochs; epoch += 1) {
      let loss = 0;
      for (const example of examples) {
        const probs = this.probabilities(example.vec);
        loss += -Math.log(Math.max(probs[example.label], 1e-300));
        for (let c = 0; c < probs.length; c += 1) {
          const gradient = probs[c] - (c === example.label ? 1 : 0);
          if (gradient === 0) {
            continue;
          }
          const step = learningRate * gradient;
          this.bias[c] -= step;
          const row = c * width;
          for (let i = 0; i < example.vec.indices.length; i += 1) {
            this.weights[row + example.vec.indices[i]] -= step * example.vec.values[i];
          }
        }
      }
      history.push(examples.length > 0 ? loss / examples.length : 0);
    }
    return history;
  }

  save(): Buffer {
    const header = Buffer.from(
      JSON.stringify({
        scheme: this.scheme,
        dim: this.featurizer.dim,
        seed: this.featurizer.seed,
        cap: this.cap,
        classes: this.labels.length,
      }),
      "utf-8",
    );
    const fixed = Buffer.alloc(12);
    fixed.write(MAGIC, 0, "ascii");
    fixed.writeUInt32LE(VERSION, 4);
    fixed.writeUInt32LE(header.length, 8);
    return Buffer.concat([
      fixed,
      header,
      Buffer.from(this.weights.buffer.slice(0)),
      Buffer.from(this.bias.buffer.slice(0)),
    ]);
  }

  static load(data: Buffer): SpanClassifier {
    if (data.length < 12 || data.toString("ascii", 0, 4) !== MAGIC) {
      throw new Error("not a toymodel file");
    }
    const version = data.readUInt32LE(4);
    if (version !== VERSION) {
      throw new Error(`unsupported model version ${version}`);
    }
    const headerLength = data.readUInt32LE(8);
    const header = JSON.parse(data.toString("utf-8", 12, 12 + headerLength));
    const featurizer = new SpanFeaturizer(header.dim, header.seed);
    const classes: number = header.classes;
    const width = featurizer.width;
    let offset = 12 + headerLength;
    const weights = new Float64Array(
      data.buffer.slice(data.byteOffset + offset, data.byteOffset + offset + 8 * classes * width),
    );
    offset += 8 * classes * width;
    const bias = new Float64Array(
      data.buffer.slice(data.byteOffset + offset, data.byteOffset + offset + 8 * classes),
    );
    return new SpanClassifier(header.scheme, featurizer, header.cap, weights, bias);
  }
}

/** Every span of length <= cap, labeled from the sentence's tag table. */
export function buildExamples(
  sentences: SentenceRec[],
  tables: Map<string, TagTableRec>,
  scheme: Scheme,
  featurizer: SpanFeaturizer,
  cap: number,
): Example[] {
  const labels = labelSet(scheme);
  const fallback = labels.indexOf(defaultLabel(scheme));
  const examples: Example[] = [];
  for (const sentence of sentences) {
    const table = tables.get(sentence.id);
    if (table === undefined) {
      throw new Error(`no tag table for sentence ${sentence.id}`);
    }
    if (table.n !== sentence.tokens.length) {
      throw new Error(
        `table ${sentence.id} has n=${table.n}, sentence has ${sentence.tokens.length} tokens`,
      );
    }
    const n = sentence.tokens.length;
    for (let start = 0; start < n; start += 1) {
      for (let end = start; end < Math.min(n, start + cap); end += 1) {
        const label = table.cells.get(cellKey(start, end)) ?? defaultLabel(scheme);
        const index = labels.indexOf(label);
        examples.push({
          vec: featurizer.features(sentence.tokens, start, end),
          label: index >= 0 ? index : fallback,
        });
      }
    }
  }
  return examples;
}

/** Argmax labels for every span up to the cap; non-default cells only. */
export function predictTables(
  model: SpanClassifier,
  sentences: SentenceRec[],
): TagTableRec[] {
  const skip = defaultLabel(model.scheme);
  return sentences.map((sentence) => {
    const n = sentence.tokens.length;
    const cells = new Map<string, string>();
    for (let start = 0; start < n; start += 1) {
      for (let end = start; end < Math.min(n, start + model.cap); end += 1) {
        const label = model.predictLabel(
          model.featurizer.features(sentence.tokens, start, end),
        );
        if (label !== skip) {
          cells.set(cellKey(start, end), label);
        }
      }
    }
    return { id: sentence.id, n, scheme: model.scheme, cells };
  });
}
