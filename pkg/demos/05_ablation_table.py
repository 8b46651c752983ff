"""
The five-variant ablation
=========================

Print the table from the acceptance run if it exists, otherwise run a
short single-seed ablation on a small corpus. The acceptance run itself is
``pytest tests/test_acceptance.py``.

    python demos/05_ablation_table.py [STEPS]
"""
import json
import sys
import tempfile
from pathlib import Path

from eyexin.config import RunConfig
from eyexin.data import Corpus, corpus_root, generate_corpus
from eyexin.train import format_table, run_ablation

cached = corpus_root() / "acceptance" / "ablation" / "ablation.json"
if cached.exists() and len(sys.argv) < 2:
    result = json.loads(cached.read_text())
    print(f"acceptance run from {cached} (seeds {result['seeds']})\n")
else:
    steps = int(sys.argv[1]) if len(sys.argv) > 1 else 200
    out = Path(tempfile.mkdtemp())
    generate_corpus(out / "corpus", seed=0, sizes={"train": 40, "val": 5, "test": 20})
    corpus = Corpus(out / "corpus")
    result = run_ablation(RunConfig(steps=steps, corpus=str(corpus.path)), corpus, (0,), out)
    print(f"short run, {steps} steps, one seed\n")
print(format_table(result))
for row in result["rows"]:
    if "margin" in row:
        print(f"{row['variant']:>13} seed {row['seed']}: alpha lesion {row['alpha_lesion']:.4f}"
              f"  background {row['alpha_background']:.4f}")
