/**
 * Token-id encoding of argument pairs.
 *
 * Arguments arrive pre-tokenized (space-separated); the vocabulary is built
 * from training data only, everything else maps to OOV. Sequences are
 * clipped to a maximum length, arg1 from the left and arg2 from the right,
 * so the material nearest the argument boundary survives.
 */

import { Instance } from './data.js';

export const PAD_ID = 0;
export const OOV_ID = 1;

export interface EncodedInstance {
  arg1Ids: number[];
  arg2Ids: number[];
  label: number;
  goldLabels: number[];
}

export class Vocabulary {
  private readonly ids = new Map<string, number>();

  constructor(tokens: Iterable<string>) {
    for (const token of tokens) {
      if (!this.ids.has(token)) {
        this.ids.set(token, this.ids.size + 2); // 0 = pad, 1 = oov
      }
    }
  }

  get size(): number {
    return this.ids.size + 2;
  }

  idOf(token: string): number {
    return this.ids.get(token) ?? OOV_ID;
  }
}

export function tokenize(text: string): string[] {
  return text
    .toLowerCase()
    .split(/\s+/)
    .filter((t) => t.length > 0);
}

export function buildVocabulary(training: Instance[]): Vocabulary {
  function* tokens() {
    for (const inst of training) {
      yield* tokenize(inst.arg1);
      yield* tokenize(inst.arg2);
    }
  }
  return new Vocabulary(tokens());
}

export function encodeInstance(
  inst: Pick<Instance, 'arg1' | 'arg2' | 'label' | 'goldLabels'>,
  vocab: Vocabulary,
  maxLen: number,
): EncodedInstance {
  const arg1 = tokenize(inst.arg1);
  const arg2 = tokenize(inst.arg2);
  if (arg1.length === 0 || arg2.length === 0) {
    throw new Error('cannot encode an empty argument');
  }
  const arg1Ids = arg1.slice(Math.max(0, arg1.length - maxLen)).map((t) => vocab.idOf(t));
  const arg2Ids = arg2.slice(0, maxLen).map((t) => vocab.idOf(t));
  return { arg1Ids, arg2Ids, label: inst.label, goldLabels: inst.goldLabels };
}
