/** The 11 second-level sense labels, in canonical (label-index) order. */
export const SENSES = [
  'Temporal.Asynchronous',
  'Temporal.Synchrony',
  'Contingency.Cause',
  'Contingency.PragmaticCause',
  'Comparison.Contrast',
  'Comparison.Concession',
  'Expansion.Conjunction',
  'Expansion.Instantiation',
  'Expansion.Restatement',
  'Expansion.Alternative',
  'Expansion.List',
] as const;

export type Sense = (typeof SENSES)[number];

export const NUM_SENSES = SENSES.length;

const INDEX: ReadonlyMap<string, number> = new Map(SENSES.map((s, i) => [s, i]));

export function senseIndex(sense: string): number {
  const index = INDEX.get(sense);
  if (index === undefined) {
    throw new Error(`unknown sense label: ${sense}`);
  }
  return index;
}

export function isSense(value: string): value is Sense {
  return INDEX.has(value);
}
