"""
Train and score a small model
=============================

Generate a small corpus, train the full model for a few hundred steps and
score it on closed and open questions. Pass a directory to keep the
outputs; by default everything goes to a temporary directory.

    python demos/04_train_and_evaluate.py [OUT_DIR] [STEPS]
"""
import sys
import tempfile
from pathlib import Path

from eyexin.config import RunConfig
from eyexin.data import Corpus, generate_corpus
from eyexin.train import Trainer, evaluate

out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(tempfile.mkdtemp())
steps = int(sys.argv[2]) if len(sys.argv) > 2 else 300

generate_corpus(out / "corpus", seed=0, sizes={"train": 40, "val": 5, "test": 10})
corpus = Corpus(out / "corpus")
print(f"corpus at {corpus.path}: {len(corpus)} items")

cfg = RunConfig(steps=steps, corpus=str(corpus.path), train_mode="both", checkpoint_every=0)
trainer = Trainer(cfg, corpus)
history = trainer.run(log_file=out / "train_log.jsonl")
print(f"loss {history[0]['loss']:.3f} -> {history[-1]['loss']:.3f} over {steps} steps")
trainer.save(out / "final.ckpt")

for mode in ("closed", "open"):
    report = evaluate(trainer.model, corpus, "test", mode).report
    print(mode, {k: round(v, 4) if isinstance(v, float) else v for k, v in report.items()})
