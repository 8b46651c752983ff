"""
Planted-lesion images
=====================

Each sample has a colour view with at most a faint trace of the lesion and
a saliency channel where the lesion is strong. Render one sample per class
and look at where the energy sits.
"""
import numpy as np

from eyexin import vocab
from eyexin.data import N_PATCHES, LesionSpec, render_sample

for class_id, name in enumerate(vocab.CLASS_NAMES):
    patches = () if class_id == 0 else (5, 10)
    sample = render_sample(LesionSpec(class_id, patches, 0.02, pattern_seed=class_id))
    sal, mask = sample.expert_channel[0], sample.lesion_mask.astype(bool)
    inside = (sal[mask] ** 2).sum()
    outside = (sal[~mask] ** 2).sum()
    ratio = inside / outside if outside else float("inf")
    print(f"{name:>14}: mask pixels {mask.sum():4d}  saliency energy in/out "
          f"{inside:8.2f} / {outside:.2e}  ratio {ratio:.3g}")

# the mask of the last sample, one character per 2x2 block
print()
for row in mask[::2, ::2]:
    print("".join("#" if v else "." for v in row))
print(f"\n{N_PATCHES} patches; lesions were planted in patches 5 and 10")
