/**
 * Pre-trained word-vector loading (text format: optional "count dim"
 * header, then one "word v1 .. vD" line each). Vocabulary words found in
 * the file get their pre-trained vector; everything else keeps the uniform
 * random initialization.
 */

import { readFileSync } from 'node:fs';
import * as tf from '@tensorflow/tfjs';

import { Vocabulary, tokenize } from './vocab.js';

export function loadTextEmbeddings(
  path: string,
  expectedDim: number,
): Map<string, Float32Array> {
  const vectors = new Map<string, Float32Array>();
  const lines = readFileSync(path, 'utf-8').split('\n');
  let start = 0;
  const header = lines[0]?.trim().split(/\s+/);
  if (header && header.length === 2 && header.every((t) => /^\d+$/.test(t))) {
    start = 1; // word2vec-style "count dim" header
    if (Number(header[1]) !== expectedDim) {
      throw new Error(
        `${path}: embedding dimension ${header[1]} does not match configured ${expectedDim}`,
      );
    }
  }
  for (let i = start; i < lines.length; i++) {
    const line = lines[i].trim();
    if (!line) continue;
    const parts = line.split(/\s+/);
    if (parts.length !== expectedDim + 1) {
      throw new Error(`${path}: line ${i + 1}: expected ${expectedDim + 1} fields`);
    }
    vectors.set(parts[0], Float32Array.from(parts.slice(1), Number));
  }
  return vectors;
}

export function embeddingInitializer(
  vectors: Map<string, Float32Array>,
  dim: number,
  initScale: number,
  seed: number,
): (vocab: Vocabulary) => tf.Tensor2D {
  return (vocab) => {
    const matrix = tf.randomUniform([vocab.size, dim], -initScale, initScale, 'float32', seed);
    const data = matrix.dataSync() as Float32Array;
    matrix.dispose();
    for (const [word, vector] of vectors) {
      const id = vocab.idOf(tokenize(word)[0] ?? word);
      if (id > 1) {
        data.set(vector, id * dim);
      }
    }
    return tf.tensor2d(data, [vocab.size, dim]);
  };
}
