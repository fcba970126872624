#!/usr/bin/env node
/**
 * train --pdtb FILE --extra FILE --protocol {lin|ji|cv10} --runs N --out metrics.json
 *
 * The PDTB file is a JSONL export with a per-instance `section` field (and
 * optionally a `senses` list); the extra file is the mining pipeline's
 * training JSONL and is appended to the training side only.
 */

import { writeFileSync } from 'node:fs';
import yargs from 'yargs';
import { hideBin } from 'yargs/helpers';

import { loadInstances } from './data.js';
import { embeddingInitializer, loadTextEmbeddings } from './embeddings.js';
import { PROTOCOLS, Protocol } from './splits.js';
import { DEFAULT_TRAIN, evaluateProtocol } from './train.js';

export async function main(argv: string[]): Promise<number> {
  const args = await yargs(argv)
    .command('train', 'train and evaluate under a split protocol')
    .demandCommand(1)
    .option('pdtb', { type: 'string', demandOption: true, describe: 'PDTB export JSONL (with section field)' })
    .option('extra', { type: 'string', describe: 'mined training JSONL, appended to train only' })
    .option('protocol', { choices: PROTOCOLS, demandOption: true })
    .option('runs', { type: 'number', default: 10 })
    .option('out', { type: 'string', demandOption: true, describe: 'metrics JSON output path' })
    .option('epochs', { type: 'number', default: DEFAULT_TRAIN.epochs })
    .option('batch-size', { type: 'number', default: DEFAULT_TRAIN.batchSize })
    .option('patience', { type: 'number', default: DEFAULT_TRAIN.patience })
    .option('max-len', { type: 'number', default: DEFAULT_TRAIN.maxLen })
    .option('hidden-dim', { type: 'number', default: DEFAULT_TRAIN.hiddenDim })
    .option('embedding-dim', { type: 'number', default: DEFAULT_TRAIN.embeddingDim })
    .option('embeddings', { type: 'string', describe: 'pre-trained word vectors (text format)' })
    .option('seed', { type: 'number', default: DEFAULT_TRAIN.seed })
    .strict()
    .parse();

  const pdtb = loadInstances(args.pdtb, { requireSection: true });
  const extra = args.extra ? loadInstances(args.extra) : [];
  const metrics = evaluateProtocol(pdtb, extra, args.protocol as Protocol, args.runs, {
    epochs: args.epochs,
    batchSize: args['batch-size'],
    patience: args.patience,
    maxLen: args['max-len'],
    hiddenDim: args['hidden-dim'],
    embeddingDim: args['embedding-dim'],
    seed: args.seed,
    embedding: args.embeddings
      ? embeddingInitializer(
          loadTextEmbeddings(args.embeddings, args['embedding-dim']),
          args['embedding-dim'],
          0.1,
          args.seed,
        )
      : undefined,
  });
  writeFileSync(args.out, JSON.stringify(metrics, null, 2) + '\n', 'utf-8');
  console.error(
    `${metrics.protocol}: mean accuracy ${(100 * metrics.mean_acc).toFixed(2)} ` +
      `(std ${(100 * metrics.std).toFixed(2)}) over ${metrics.runs} runs`,
  );
  return 0;
}

const invokedDirectly =
  process.argv[1] && import.meta.url.endsWith(process.argv[1].split('/').pop() ?? '');
if (invokedDirectly) {
  main(hideBin(process.argv)).then(
    (code) => process.exit(code),
    (err) => {
      console.error(err instanceof Error ? err.message : err);
      process.exit(1);
    },
  );
}
