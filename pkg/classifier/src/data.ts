/**
 * JSONL instance loading.
 *
 * Two inputs share one schema: the mining pipeline's training files
 * ({arg1, arg2, sense, source}) and a PDTB export the user produces from
 * their licensed copy, which additionally carries the section number and,
 * optionally, the full list of annotated senses (an instance counts as
 * correct when any of them is predicted).
 */

import { readFileSync } from 'node:fs';
import { z } from 'zod';

import { isSense, senseIndex } from './senses.js';

const senseString = z.string().refine(isSense, (v) => ({ message: `unknown sense label: ${v}` }));

const recordSchema = z.object({
  arg1: z.string().min(1),
  arg2: z.string().min(1),
  sense: senseString,
  source: z.string().optional(),
  section: z.number().int().min(0).max(24).optional(),
  senses: z.array(senseString).nonempty().optional(),
});

export interface Instance {
  arg1: string;
  arg2: string;
  /** primary label index, used for training */
  label: number;
  /** all gold label indices, used for scoring */
  goldLabels: number[];
  source: string;
  section?: number;
}

export function parseInstances(text: string, opts: { requireSection?: boolean } = {}): Instance[] {
  const instances: Instance[] = [];
  const lines = text.split('\n');
  for (let i = 0; i < lines.length; i++) {
    const line = lines[i].trim();
    if (!line) continue;
    let record;
    try {
      record = recordSchema.parse(JSON.parse(line));
    } catch (err) {
      throw new Error(`line ${i + 1}: ${err instanceof Error ? err.message : String(err)}`);
    }
    if (opts.requireSection && record.section === undefined) {
      throw new Error(`line ${i + 1}: missing section number`);
    }
    const gold = record.senses ?? [record.sense];
    instances.push({
      arg1: record.arg1,
      arg2: record.arg2,
      label: senseIndex(record.sense),
      goldLabels: gold.map(senseIndex),
      source: record.source ?? '',
      section: record.section,
    });
  }
  return instances;
}

export function loadInstances(path: string, opts: { requireSection?: boolean } = {}): Instance[] {
  try {
    return parseInstances(readFileSync(path, 'utf-8'), opts);
  } catch (err) {
    throw new Error(`${path}: ${err instanceof Error ? err.message : String(err)}`);
  }
}
