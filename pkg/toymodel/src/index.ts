export { SentenceRec, TagTableRec, cellKey, formatTagTables, parseCorpus, parseTagTables } from "./corpus";
export { SpanFeaturizer, SparseVec, hashToken } from "./features";
export { Scheme, defaultLabel, labelSet, parseScheme } from "./labels";
export {
  DEFAULT_HYPERPARAMS,
  Example,
  Hyperparams,
  SpanClassifier,
  buildExamples,
  predictTables,
  softmax,
} from "./model";
export { main } from "./cli";
