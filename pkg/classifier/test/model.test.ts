import * as tf from '@tensorflow/tfjs';
import { describe, expect, it } from 'vitest';

import { BiLstmClassifier, DEFAULT_CONFIG, ModelConfig } from '../src/model.js';
import { NUM_SENSES } from '../src/senses.js';
import { rng } from '../src/train.js';
import { EncodedInstance } from '../src/vocab.js';

const VOCAB = 40;

function config(overrides: Partial<ModelConfig> = {}): ModelConfig {
  return {
    ...DEFAULT_CONFIG,
    vocabSize: VOCAB,
    embeddingDim: 12,
    hiddenDim: 10,
    seed: 7,
    ...overrides,
  };
}

/** Seeded random batches so failures reproduce. */
function randomInstances(n: number, seed: number): EncodedInstance[] {
  const random = rng(seed);
  const randInt = (lo: number, hi: number) => lo + Math.floor(random() * (hi - lo));
  const sequence = () => Array.from({ length: randInt(1, 9) }, () => randInt(2, VOCAB));
  return Array.from({ length: n }, () => {
    const label = randInt(0, NUM_SENSES);
    return { arg1Ids: sequence(), arg2Ids: sequence(), label, goldLabels: [label] };
  });
}

function read(t: tf.Tensor): number[][] {
  const rows = t.arraySync() as number[][];
  t.dispose();
  return rows;
}

describe('forward pass', () => {
  it('softmax rows sum to 1 within 1e-6, with 11 probabilities in (0, 1)', () => {
    const model = new BiLstmClassifier(config());
    const probs = model.forward(randomInstances(16, 3));
    expect(probs.shape).toEqual([16, NUM_SENSES]);
    for (const row of read(probs)) {
      const sum = row.reduce((a, b) => a + b, 0);
      expect(Math.abs(sum - 1)).toBeLessThanOrEqual(1e-6);
      for (const p of row) {
        expect(p).toBeGreaterThan(0);
        expect(p).toBeLessThan(1);
      }
    }
    model.dispose();
  });

  it('is deterministic at inference time', () => {
    const batch = randomInstances(6, 5);
    const a = new BiLstmClassifier(config());
    const b = new BiLstmClassifier(config());
    const first = read(a.forward(batch));
    expect(read(a.forward(batch))).toEqual(first); // same model, repeated call
    expect(read(b.forward(batch))).toEqual(first); // same seed, fresh model
    a.dispose();
    b.dispose();
  });

  it('padding does not change a sequence\'s representation', () => {
    const short: EncodedInstance = { arg1Ids: [4, 9], arg2Ids: [7], label: 0, goldLabels: [0] };
    const long: EncodedInstance = {
      arg1Ids: [2, 3, 5, 8, 13, 21, 34, 2],
      arg2Ids: [3, 6, 9, 12, 15, 18],
      label: 1,
      goldLabels: [1],
    };
    const model = new BiLstmClassifier(config());
    const alone = read(model.represent([short]))[0];
    const padded = read(model.represent([short, long]))[0];
    padded.forEach((v, i) => expect(v).toBeCloseTo(alone[i], 6));
    model.dispose();
  });

  it('gives identical halves for identical arguments once the encoders are tied', () => {
    const model = new BiLstmClassifier(config());
    model.encoders[1].assignFrom(model.encoders[0]);
    const inst: EncodedInstance = {
      arg1Ids: [4, 9, 2, 17, 30],
      arg2Ids: [4, 9, 2, 17, 30],
      label: 0,
      goldLabels: [0],
    };
    const [row] = read(model.represent([inst]));
    const h = config().hiddenDim;
    expect(row).toHaveLength(2 * h);
    for (let i = 0; i < h; i++) {
      expect(row[i]).toBeCloseTo(row[h + i], 12);
    }
    model.dispose();
  });

  it('untied encoders give different halves for identical arguments', () => {
    const model = new BiLstmClassifier(config());
    const inst: EncodedInstance = {
      arg1Ids: [4, 9, 2, 17, 30],
      arg2Ids: [4, 9, 2, 17, 30],
      label: 0,
      goldLabels: [0],
    };
    const [row] = read(model.represent([inst]));
    const h = config().hiddenDim;
    const gap = Array.from({ length: h }, (_, i) => Math.abs(row[i] - row[h + i]));
    expect(Math.max(...gap)).toBeGreaterThan(1e-6);
    model.dispose();
  });

  it('rejects an empty batch', () => {
    const model = new BiLstmClassifier(config());
    expect(() => model.represent([])).toThrow(/empty batch/);
    expect(() => model.accuracy([])).toThrow(/empty/);
    expect(model.predict([])).toEqual([]);
    model.dispose();
  });
});

describe('training', () => {
  it('loss strictly decreases over the first five steps with dropout off', () => {
    const model = new BiLstmClassifier(config({ dropoutEmbed: 0, dropoutOutput: 0 }));
    const batch = randomInstances(12, 11);
    const losses = [model.loss(batch)];
    for (let step = 0; step < 5; step++) {
      model.trainStep(batch);
      losses.push(model.loss(batch));
    }
    for (let i = 1; i < losses.length; i++) {
      expect(losses[i]).toBeLessThan(losses[i - 1]);
    }
    model.dispose();
  });

  it('trainStep returns the pre-update batch loss', () => {
    const model = new BiLstmClassifier(config({ dropoutEmbed: 0, dropoutOutput: 0 }));
    const batch = randomInstances(8, 17);
    const before = model.loss(batch);
    expect(model.trainStep(batch)).toBeCloseTo(before, 5);
    model.dispose();
  });

  it('restore rewinds every parameter to the snapshot', () => {
    const model = new BiLstmClassifier(config({ dropoutEmbed: 0, dropoutOutput: 0 }));
    const batch = randomInstances(6, 29);
    const before = read(model.forward(batch));
    const snap = model.snapshot();
    for (let i = 0; i < 3; i++) model.trainStep(batch);
    expect(read(model.forward(batch))).not.toEqual(before);
    model.restore(snap);
    snap.forEach((t) => t.dispose());
    expect(read(model.forward(batch))).toEqual(before);
    model.dispose();
  });
});

describe('scoring', () => {
  it('counts a prediction as correct when any gold label matches', () => {
    const model = new BiLstmClassifier(config());
    const batch = randomInstances(8, 23);
    const predicted = model.predict(batch);
    for (const p of predicted) {
      expect(Number.isInteger(p)).toBe(true);
      expect(p).toBeGreaterThanOrEqual(0);
      expect(p).toBeLessThan(NUM_SENSES);
    }
    const relabel = (gold: (p: number) => number[]) =>
      batch.map((inst, i) => ({ ...inst, goldLabels: gold(predicted[i]) }));
    expect(model.accuracy(relabel((p) => [p]))).toBe(1);
    expect(model.accuracy(relabel((p) => [(p + 1) % NUM_SENSES]))).toBe(0);
    expect(model.accuracy(relabel((p) => [(p + 1) % NUM_SENSES, p]))).toBe(1);
    expect(model.accuracy(relabel((p) => [p]), 3)).toBe(1); // chunked scoring agrees
    model.dispose();
  });
});
