import { mkdtempSync, writeFileSync } from 'node:fs';
import { tmpdir } from 'node:os';
import { join } from 'node:path';

import { describe, expect, it } from 'vitest';

import { embeddingInitializer, loadTextEmbeddings } from '../src/embeddings.js';
import { Vocabulary } from '../src/vocab.js';

function vectorFile(content: string): string {
  const dir = mkdtempSync(join(tmpdir(), 'vectors-'));
  const path = join(dir, 'vectors.txt');
  writeFileSync(path, content, 'utf-8');
  return path;
}

describe('loadTextEmbeddings', () => {
  it('reads plain word-per-line vectors', () => {
    const path = vectorFile('hello 1 2 3\nworld 4 5 6\n');
    const vectors = loadTextEmbeddings(path, 3);
    expect(vectors.size).toBe(2);
    expect([...vectors.get('hello')!]).toEqual([1, 2, 3]);
    expect([...vectors.get('world')!]).toEqual([4, 5, 6]);
  });

  it('accepts and validates a count/dimension header', () => {
    const path = vectorFile('2 3\nhello 1 2 3\nworld 4 5 6\n');
    expect(loadTextEmbeddings(path, 3).size).toBe(2);
    expect(() => loadTextEmbeddings(path, 5)).toThrow(/dimension 3 does not match configured 5/);
  });

  it('reports the line of a malformed row', () => {
    const path = vectorFile('hello 1 2 3\nworld 4 5\n');
    expect(() => loadTextEmbeddings(path, 3)).toThrow(/line 2: expected 4 fields/);
  });
});

describe('embeddingInitializer', () => {
  it('overrides known words and leaves the rest randomly initialized', () => {
    const vocab = new Vocabulary(['hello', 'novel']);
    const vectors = new Map([
      ['hello', Float32Array.from([1, 2, 3])],
      ['unseen', Float32Array.from([9, 9, 9])], // not in vocab; must not clobber OOV
    ]);
    const matrix = embeddingInitializer(vectors, 3, 0.1, 77)(vocab);
    expect(matrix.shape).toEqual([vocab.size, 3]);
    const rows = matrix.arraySync();
    matrix.dispose();
    expect(rows[vocab.idOf('hello')]).toEqual([1, 2, 3]);
    for (const id of [0, 1, vocab.idOf('novel')]) {
      for (const v of rows[id]) {
        expect(Math.abs(v)).toBeLessThanOrEqual(0.1);
      }
    }
  });
});
