export { SENSES, NUM_SENSES, senseIndex, isSense } from './senses.js';
export type { Sense } from './senses.js';
export { parseInstances, loadInstances } from './data.js';
export type { Instance } from './data.js';
export { PROTOCOLS, sectionAssignment, buildSplits } from './splits.js';
export type { Protocol, Split, SectionAssignment } from './splits.js';
export { PAD_ID, OOV_ID, Vocabulary, tokenize, buildVocabulary, encodeInstance } from './vocab.js';
export type { EncodedInstance } from './vocab.js';
export { ArgumentEncoder, BiLstmClassifier, DEFAULT_CONFIG } from './model.js';
export type { ModelConfig } from './model.js';
export {
  DEFAULT_TRAIN,
  evaluateProtocol,
  majorityBaseline,
  rng,
  scoreSplit,
  trainOnSplit,
} from './train.js';
export type { Metrics, RunMetrics, TrainOptions, TrainedRun } from './train.js';
export { loadTextEmbeddings, embeddingInitializer } from './embeddings.js';
