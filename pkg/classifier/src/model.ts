/**
 * Bi-LSTM argument-pair classifier.
 *
 * Each argument runs through its own bidirectional LSTM; per direction the
 * hidden states are averaged over time, the two directions are averaged,
 * and the two argument representations are concatenated and projected to
 * the 11 sense logits. Dropout 0.5 sits after the embedding lookup and
 * dropout 0.2 before the output projection. Parameters are initialized
 * uniformly at random and trained with Adagrad under cross-entropy.
 */

import * as tf from '@tensorflow/tfjs';

import { NUM_SENSES } from './senses.js';
import { EncodedInstance, PAD_ID } from './vocab.js';

export interface ModelConfig {
  vocabSize: number;
  embeddingDim: number;
  hiddenDim: number;
  dropoutEmbed: number;
  dropoutOutput: number;
  learningRate: number;
  initScale: number;
  seed: number;
}

export const DEFAULT_CONFIG: Omit<ModelConfig, 'vocabSize'> = {
  embeddingDim: 300,
  hiddenDim: 128,
  dropoutEmbed: 0.5,
  dropoutOutput: 0.2,
  learningRate: 0.01,
  initScale: 0.1,
  seed: 1,
};

function uniform(shape: number[], scale: number, seed: number): tf.Tensor {
  return tf.randomUniform(shape, -scale, scale, 'float32', seed);
}

interface Batch {
  /** [B, T] ids, zero-padded; one tensor per direction (backward = rows reversed) */
  forward: tf.Tensor2D;
  backward: tf.Tensor2D;
  mask: tf.Tensor2D; // [B, T] 1.0 on real tokens
  lengths: tf.Tensor2D; // [B, 1]
}

function toBatch(sequences: number[][]): Batch {
  const maxLen = Math.max(...sequences.map((s) => s.length));
  const pad = (seq: number[]) => seq.concat(Array(maxLen - seq.length).fill(PAD_ID));
  const forward = sequences.map(pad);
  const backward = sequences.map((seq) => pad([...seq].reverse()));
  const mask = sequences.map((seq) =>
    Array.from({ length: maxLen }, (_, t) => (t < seq.length ? 1 : 0)),
  );
  return {
    forward: tf.tensor2d(forward, undefined, 'int32'),
    backward: tf.tensor2d(backward, undefined, 'int32'),
    mask: tf.tensor2d(mask),
    lengths: tf.tensor2d(sequences.map((s) => [s.length])),
  };
}

/** One argument's bidirectional recurrent encoder. */
export class ArgumentEncoder {
  readonly kernels: [tf.Variable, tf.Variable]; // forward, backward
  readonly biases: [tf.Variable, tf.Variable];
  private readonly hiddenDim: number;

  constructor(config: ModelConfig, seed: number) {
    const kernelShape = [config.embeddingDim + config.hiddenDim, 4 * config.hiddenDim];
    this.kernels = [
      tf.variable(uniform(kernelShape, config.initScale, seed)),
      tf.variable(uniform(kernelShape, config.initScale, seed + 1)),
    ];
    this.biases = [
      tf.variable(uniform([4 * config.hiddenDim], config.initScale, seed + 2)),
      tf.variable(uniform([4 * config.hiddenDim], config.initScale, seed + 3)),
    ];
    this.hiddenDim = config.hiddenDim;
  }

  get variables(): tf.Variable[] {
    return [...this.kernels, ...this.biases];
  }

  /** Copy another encoder's parameters (used to tie encoders in tests). */
  assignFrom(other: ArgumentEncoder): void {
    this.variables.forEach((v, i) => v.assign(other.variables[i] as tf.Tensor));
  }

  /** Masked temporal mean of one direction's hidden states: [B, H]. */
  private runDirection(
    embedded: tf.Tensor3D,
    mask: tf.Tensor2D,
    lengths: tf.Tensor2D,
    direction: 0 | 1,
  ): tf.Tensor2D {
    const [batch, steps] = [embedded.shape[0], embedded.shape[1]];
    let c = tf.zeros([batch, this.hiddenDim]) as tf.Tensor2D;
    let h = tf.zeros([batch, this.hiddenDim]) as tf.Tensor2D;
    let sum = tf.zeros([batch, this.hiddenDim]) as tf.Tensor2D;
    for (let t = 0; t < steps; t++) {
      const x = embedded.slice([0, t, 0], [batch, 1, -1]).squeeze([1]) as tf.Tensor2D;
      [c, h] = tf.basicLSTMCell(
        1.0,
        this.kernels[direction] as tf.Tensor2D,
        this.biases[direction] as tf.Tensor1D,
        x,
        c,
        h,
      );
      const stepMask = mask.slice([0, t], [batch, 1]);
      sum = sum.add(h.mul(stepMask));
    }
    return sum.div(lengths);
  }

  /** Average of the two directions' temporal means: [B, H]. */
  encode(embeddedForward: tf.Tensor3D, embeddedBackward: tf.Tensor3D, batch: Batch): tf.Tensor2D {
    const fwd = this.runDirection(embeddedForward, batch.mask, batch.lengths, 0);
    const bwd = this.runDirection(embeddedBackward, batch.mask, batch.lengths, 1);
    return fwd.add(bwd).div(2) as tf.Tensor2D;
  }
}

export class BiLstmClassifier {
  readonly config: ModelConfig;
  readonly embedding: tf.Variable;
  readonly encoders: [ArgumentEncoder, ArgumentEncoder];
  readonly outputWeights: tf.Variable;
  readonly outputBias: tf.Variable;
  private readonly optimizer: tf.AdagradOptimizer;
  private dropoutCounter = 0;

  constructor(config: ModelConfig, pretrainedEmbedding?: tf.Tensor2D) {
    this.config = config;
    this.embedding = tf.variable(
      pretrainedEmbedding ??
        uniform([config.vocabSize, config.embeddingDim], config.initScale, config.seed),
    );
    this.encoders = [
      new ArgumentEncoder(config, config.seed + 100),
      new ArgumentEncoder(config, config.seed + 200),
    ];
    this.outputWeights = tf.variable(
      uniform([2 * config.hiddenDim, NUM_SENSES], config.initScale, config.seed + 300),
    );
    this.outputBias = tf.variable(
      uniform([NUM_SENSES], config.initScale, config.seed + 301),
    );
    this.optimizer = tf.train.adagrad(config.learningRate);
  }

  get variables(): tf.Variable[] {
    return [
      this.embedding,
      ...this.encoders[0].variables,
      ...this.encoders[1].variables,
      this.outputWeights,
      this.outputBias,
    ];
  }

  private embed(ids: tf.Tensor2D, training: boolean): tf.Tensor3D {
    let embedded = tf.gather(this.embedding as tf.Tensor2D, ids) as unknown as tf.Tensor3D;
    if (training && this.config.dropoutEmbed > 0) {
      embedded = tf.dropout(
        embedded,
        this.config.dropoutEmbed,
        undefined,
        this.config.seed + ++this.dropoutCounter,
      ) as tf.Tensor3D;
    }
    return embedded;
  }

  private encodeArgument(which: 0 | 1, sequences: number[][], training: boolean): tf.Tensor2D {
    const batch = toBatch(sequences);
    return this.encoders[which].encode(
      this.embed(batch.forward, training),
      this.embed(batch.backward, training),
      batch,
    );
  }

  /** Concatenated argument representations, [B, 2H] (before dropout). */
  represent(instances: EncodedInstance[], training = false): tf.Tensor2D {
    if (!instances.length) {
      throw new Error('empty batch');
    }
    return tf.tidy(() => {
      const arg1 = this.encodeArgument(0, instances.map((i) => i.arg1Ids), training);
      const arg2 = this.encodeArgument(1, instances.map((i) => i.arg2Ids), training);
      return tf.concat([arg1, arg2], 1) as tf.Tensor2D;
    });
  }

  logits(instances: EncodedInstance[], training = false): tf.Tensor2D {
    return tf.tidy(() => {
      let pair = this.represent(instances, training);
      if (training && this.config.dropoutOutput > 0) {
        pair = tf.dropout(
          pair,
          this.config.dropoutOutput,
          undefined,
          this.config.seed + ++this.dropoutCounter,
        ) as tf.Tensor2D;
      }
      return pair.matMul(this.outputWeights as tf.Tensor2D).add(this.outputBias) as tf.Tensor2D;
    });
  }

  /** Softmax probabilities over the 11 senses: [B, 11]. */
  forward(instances: EncodedInstance[], training = false): tf.Tensor2D {
    return tf.tidy(() => tf.softmax(this.logits(instances, training)) as tf.Tensor2D);
  }

  loss(instances: EncodedInstance[], training = false): number {
    return tf.tidy(() => {
      const labels = tf.oneHot(
        instances.map((i) => i.label),
        NUM_SENSES,
      );
      return tf.losses
        .softmaxCrossEntropy(labels, this.logits(instances, training))
        .dataSync()[0];
    });
  }

  /** One Adagrad step on a batch; returns the training loss. */
  trainStep(instances: EncodedInstance[]): number {
    const cost = this.optimizer.minimize(
      () => {
        const labels = tf.oneHot(
          instances.map((i) => i.label),
          NUM_SENSES,
        );
        return tf.losses.softmaxCrossEntropy(
          labels,
          this.logits(instances, true),
        ) as tf.Scalar;
      },
      true,
      this.variables,
    );
    const value = cost!.dataSync()[0];
    cost!.dispose();
    return value;
  }

  predict(instances: EncodedInstance[]): number[] {
    if (!instances.length) return [];
    return tf.tidy(() => {
      const probs = this.forward(instances, false);
      return Array.from(probs.argMax(1).dataSync());
    });
  }

  /** Accuracy with any-gold-counts-as-correct scoring. */
  accuracy(instances: EncodedInstance[], batchSize = 64): number {
    if (!instances.length) {
      throw new Error('cannot score an empty set');
    }
    let correct = 0;
    for (let i = 0; i < instances.length; i += batchSize) {
      const chunk = instances.slice(i, i + batchSize);
      const predicted = this.predict(chunk);
      chunk.forEach((inst, j) => {
        if (inst.goldLabels.includes(predicted[j])) correct++;
      });
    }
    return correct / instances.length;
  }

  /** Snapshot of all parameters (kept out of any tidy scope). */
  snapshot(): tf.Tensor[] {
    return this.variables.map((v) => tf.keep(v.clone()));
  }

  restore(snapshot: tf.Tensor[]): void {
    this.variables.forEach((v, i) => v.assign(snapshot[i]));
  }

  dispose(): void {
    this.variables.forEach((v) => v.dispose());
    this.optimizer.dispose();
  }
}
