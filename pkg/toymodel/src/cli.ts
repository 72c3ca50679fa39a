/**
 * toymodel CLI: train a span classifier on encoded tag tables, then emit
 * prediction tables in the same interchange format.
 *
 *   toymodel train --corpus c.txt --tables gold.tables --out model.bin
 *                  [--scheme 3d] [--epochs N] [--lr X] [--cap N] [--dim N] [--seed N]
 *   toymodel predict --model model.bin --corpus c.txt --out pred.tables [--scheme 3d]
 */

import * as fs from "node:fs";
import { parseArgs } from "node:util";

import { formatTagTables, parseCorpus, parseTagTables, TagTableRec } from "./corpus";
import { SpanFeaturizer } from "./features";
import { parseScheme } from "./labels";
import {
  DEFAULT_HYPERPARAMS,
  SpanClassifier,
  buildExamples,
  predictTables,
} from "./model";

function readText(path: string): string {
  return fs.readFileSync(path, "utf-8");
}

function cmdTrain(argv: string[]): number {
  const { values } = parseArgs({
    args: argv,
    options: {
      corpus: { type: "string" },
      tables: { type: "string" },
      out: { type: "string" },
      scheme: { type: "string", default: "3d" },
      epochs: { type: "string", default: String(DEFAULT_HYPERPARAMS.epochs) },
      lr: { type: "string", default: String(DEFAULT_HYPERPARAMS.learningRate) },
      cap: { type: "string", default: String(DEFAULT_HYPERPARAMS.cap) },
      dim: { type: "string", default: String(DEFAULT_HYPERPARAMS.dim) },
      seed: { type: "string", default: String(DEFAULT_HYPERPARAMS.seed) },
    },
  });
  if (!values.corpus || !values.tables || !values.out) {
    throw new UsageError("train requires --corpus, --tables and --out");
  }
  const scheme = parseScheme(values.scheme!);
  const sentences = parseCorpus(readText(values.corpus));
  const tables = new Map<string, TagTableRec>();
  for (const table of parseTagTables(readText(values.tables))) {
    if (table.scheme !== scheme) {
      throw new UsageError(
        `table ${table.id} uses scheme ${table.scheme}, expected ${scheme}`,
      );
    }
    tables.set(table.id, table);
  }
  const featurizer = new SpanFeaturizer(Number(values.dim), Number(values.seed));
  const cap = Number(values.cap);
  const model = new SpanClassifier(scheme, featurizer, cap);
  const examples = buildExamples(sentences, tables, scheme, featurizer, cap);
  const history = model.train(examples, Number(values.epochs), Number(values.lr));
  fs.writeFileSync(values.out, model.save());
  const finalLoss = history.length > 0 ? history[history.length - 1] : NaN;
  process.stderr.write(
    `trained on ${examples.length} spans, ${history.length} epochs,` +
      ` final mean loss ${Number.isNaN(finalLoss) ? "n/a" : finalLoss.toFixed(6)}\n`,
  );
  return 0;
}

function cmdPredict(argv: string[]): number {
  const { values } = parseArgs({
    args: argv,
    options: {
      model: { type: "string" },
      corpus: { type: "string" },
      out: { type: "string" },
      scheme: { type: "string" },
    },
  });
  if (!values.model || !values.corpus || !values.out) {
    throw new UsageError("predict requires --model, --corpus and --out");
  }
  const model = SpanClassifier.load(fs.readFileSync(values.model));
  if (values.scheme !== undefined && parseScheme(values.scheme) !== model.scheme) {
    throw new UsageError(
      `model was trained for scheme ${model.scheme}, not ${values.scheme}`,
    );
  }
  const sentences = parseCorpus(readText(values.corpus));
  fs.writeFileSync(values.out, formatTagTables(predictTables(model, sentences)));
  return 0;
}

export class UsageError extends Error {}

export function main(argv: string[]): number {
  const [command, ...rest] = argv;
  try {
    if (command === "train") {
      return cmdTrain(rest);
    }
    if (command === "predict") {
      return cmdPredict(rest);
    }
    throw new UsageError(
      `unknown command ${JSON.stringify(command ?? "")} (expected train or predict)`,
    );
  } catch (error) {
    if (error instanceof UsageError) {
      process.stderr.write(`usage error: ${error.message}\n`);
      return 1;
    }
    process.stderr.write(`error: ${(error as Error).message}\n`);
    return 2;
  }
}

if (require.main === module) {
  process.exit(main(process.argv.slice(2)));
}
