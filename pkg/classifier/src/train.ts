/**
 * Training loop and multi-run evaluation.
 *
 * Per run: fresh uniformly initialized model, epoch-wise shuffled
 * mini-batches, model selection on dev accuracy, final score on test with
 * any-gold-counts-as-correct scoring. Batch size, epochs, and patience are
 * exposed here because no standard values exist for them.
 */

import * as tf from '@tensorflow/tfjs';

import { Instance } from './data.js';
import { BiLstmClassifier, DEFAULT_CONFIG, ModelConfig } from './model.js';
import { Protocol, Split, buildSplits } from './splits.js';
import { EncodedInstance, Vocabulary, buildVocabulary, encodeInstance } from './vocab.js';

export interface TrainOptions {
  epochs: number;
  batchSize: number;
  patience: number; // epochs without dev improvement before stopping
  maxLen: number;
  hiddenDim: number;
  embeddingDim: number;
  seed: number;
  quiet?: boolean;
  embedding?: (vocab: Vocabulary) => tf.Tensor2D;
}

export const DEFAULT_TRAIN: TrainOptions = {
  epochs: 30,
  batchSize: 32,
  patience: 5,
  maxLen: 80,
  hiddenDim: DEFAULT_CONFIG.hiddenDim,
  embeddingDim: DEFAULT_CONFIG.embeddingDim,
  seed: 1,
};

/** Deterministic PRNG (mulberry32) so runs are reproducible by seed. */
export function rng(seed: number): () => number {
  let a = seed >>> 0;
  return () => {
    a = (a + 0x6d2b79f5) >>> 0;
    let t = Math.imul(a ^ (a >>> 15), 1 | a);
    t = (t + Math.imul(t ^ (t >>> 7), 61 | t)) ^ t;
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

function shuffled<T>(items: T[], random: () => number): T[] {
  const out = [...items];
  for (let i = out.length - 1; i > 0; i--) {
    const j = Math.floor(random() * (i + 1));
    [out[i], out[j]] = [out[j], out[i]];
  }
  return out;
}

export interface TrainedRun {
  model: BiLstmClassifier;
  vocab: Vocabulary;
  devAccuracy: number;
  epochsRun: number;
}

export function trainOnSplit(split: Split, opts: TrainOptions): TrainedRun {
  const vocab = buildVocabulary(split.train);
  const encode = (instances: Instance[]) =>
    instances.map((inst) => encodeInstance(inst, vocab, opts.maxLen));
  const train = encode(split.train);
  const dev = split.dev.length ? encode(split.dev) : null;

  const config: ModelConfig = {
    ...DEFAULT_CONFIG,
    vocabSize: vocab.size,
    hiddenDim: opts.hiddenDim,
    embeddingDim: opts.embeddingDim,
    seed: opts.seed,
  };
  const model = new BiLstmClassifier(config, opts.embedding?.(vocab));

  const random = rng(opts.seed * 2654435761 + 1);
  let best: tf.Tensor[] | null = null;
  let bestDev = -1;
  let sinceBest = 0;
  let epoch = 0;
  for (; epoch < opts.epochs; epoch++) {
    const order = shuffled(train, random);
    let lossSum = 0;
    let batches = 0;
    for (let i = 0; i < order.length; i += opts.batchSize) {
      lossSum += model.trainStep(order.slice(i, i + opts.batchSize));
      batches++;
    }
    if (!dev) continue;
    const devAcc = model.accuracy(dev);
    if (!opts.quiet) {
      console.error(
        `epoch ${epoch + 1}: loss ${(lossSum / batches).toFixed(4)} dev ${devAcc.toFixed(4)}`,
      );
    }
    if (devAcc > bestDev) {
      bestDev = devAcc;
      best?.forEach((t) => t.dispose());
      best = model.snapshot();
      sinceBest = 0;
    } else if (++sinceBest >= opts.patience) {
      epoch++;
      break;
    }
  }
  if (best) {
    model.restore(best);
    best.forEach((t) => t.dispose());
  }
  return { model, vocab, devAccuracy: bestDev, epochsRun: epoch };
}

export function scoreSplit(split: Split, opts: TrainOptions): number {
  const run = trainOnSplit(split, opts);
  const test = split.test.map((inst) => encodeInstance(inst, run.vocab, opts.maxLen));
  const accuracy = run.model.accuracy(test);
  run.model.dispose();
  return accuracy;
}

export interface RunMetrics {
  run: number;
  seed: number;
  accuracy: number;
}

export interface Metrics {
  protocol: Protocol;
  runs: number;
  mean_acc: number;
  std: number;
  per_run: RunMetrics[];
}

export function evaluateProtocol(
  pdtb: Instance[],
  extra: Instance[],
  protocol: Protocol,
  runs: number,
  opts: TrainOptions,
): Metrics {
  const splits = buildSplits(pdtb, protocol, extra);
  for (const [i, split] of splits.entries()) {
    if (!split.train.length || !split.test.length) {
      throw new Error(`protocol ${protocol}, split ${i}: empty train or test section set`);
    }
  }
  const perRun: RunMetrics[] = [];
  for (let run = 0; run < runs; run++) {
    const seed = opts.seed + run;
    const accuracies = splits.map((split) => scoreSplit(split, { ...opts, seed }));
    perRun.push({
      run,
      seed,
      accuracy: accuracies.reduce((a, b) => a + b, 0) / accuracies.length,
    });
  }
  const mean = perRun.reduce((a, r) => a + r.accuracy, 0) / runs;
  const std =
    runs > 1
      ? Math.sqrt(perRun.reduce((a, r) => a + (r.accuracy - mean) ** 2, 0) / (runs - 1))
      : 0;
  return { protocol, runs, mean_acc: mean, std, per_run: perRun };
}

/** Most-frequent-training-label predictor, scored like the model. */
export function majorityBaseline(train: Instance[], test: Instance[]): number {
  if (!train.length || !test.length) {
    throw new Error('majority baseline needs non-empty train and test sets');
  }
  const counts = new Map<number, number>();
  for (const inst of train) {
    counts.set(inst.label, (counts.get(inst.label) ?? 0) + 1);
  }
  let majority = -1;
  let max = -1;
  for (const [label, count] of [...counts.entries()].sort((a, b) => a[0] - b[0])) {
    if (count > max) {
      majority = label;
      max = count;
    }
  }
  const correct = test.filter((inst) => inst.goldLabels.includes(majority)).length;
  return correct / test.length;
}
