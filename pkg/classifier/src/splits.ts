/**
 * The three standard section-based evaluation splits.
 *
 *   lin   train 2-21, dev 22, test 23
 *   ji    train 2-20, dev 0-1, test 21-22
 *   cv10  10 folds over sections 0-23: fold i tests on sections with
 *         s % 10 == i, uses fold (i+1) % 10 as dev, trains on the rest
 *
 * Extra (mined) data may only ever be appended to the training side.
 */

import { Instance } from './data.js';

export const PROTOCOLS = ['lin', 'ji', 'cv10'] as const;
export type Protocol = (typeof PROTOCOLS)[number];

export interface Split {
  train: Instance[];
  dev: Instance[];
  test: Instance[];
}

function range(lo: number, hi: number): Set<number> {
  const out = new Set<number>();
  for (let s = lo; s <= hi; s++) out.add(s);
  return out;
}

export interface SectionAssignment {
  train: Set<number>;
  dev: Set<number>;
  test: Set<number>;
}

export function sectionAssignment(protocol: 'lin' | 'ji'): SectionAssignment;
export function sectionAssignment(protocol: 'cv10', fold: number): SectionAssignment;
export function sectionAssignment(protocol: Protocol, fold?: number): SectionAssignment {
  if (protocol === 'lin') {
    return { train: range(2, 21), dev: new Set([22]), test: new Set([23]) };
  }
  if (protocol === 'ji') {
    return { train: range(2, 20), dev: new Set([0, 1]), test: new Set([21, 22]) };
  }
  if (fold === undefined || fold < 0 || fold > 9) {
    throw new Error(`cv10 requires a fold in [0, 10), got ${fold}`);
  }
  const test = new Set<number>();
  const dev = new Set<number>();
  const train = new Set<number>();
  for (const s of range(0, 23)) {
    if (s % 10 === fold) test.add(s);
    else if (s % 10 === (fold + 1) % 10) dev.add(s);
    else train.add(s);
  }
  return { train, dev, test };
}

function partition(pdtb: Instance[], assignment: SectionAssignment): Split {
  const pick = (sections: Set<number>) =>
    pdtb.filter((inst) => inst.section !== undefined && sections.has(inst.section));
  return { train: pick(assignment.train), dev: pick(assignment.dev), test: pick(assignment.test) };
}

/**
 * Splits to run for one evaluation pass: a single split for lin/ji, ten for
 * cv10. Extra instances are concatenated onto the train side only.
 */
export function buildSplits(pdtb: Instance[], protocol: Protocol, extra: Instance[] = []): Split[] {
  const missing = pdtb.filter((inst) => inst.section === undefined).length;
  if (missing > 0) {
    throw new Error(`${missing} instances lack a section number; cannot split`);
  }
  const assignments =
    protocol === 'cv10'
      ? Array.from({ length: 10 }, (_, fold) => sectionAssignment('cv10', fold))
      : [sectionAssignment(protocol)];
  return assignments.map((assignment) => {
    const split = partition(pdtb, assignment);
    return { ...split, train: split.train.concat(extra) };
  });
}
