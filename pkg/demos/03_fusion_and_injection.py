"""
Gated fusion and deep injection
===============================

The fusion gate blends the two visual streams token by token. The injection
layers add the fused features back into the visual rows of the decoder,
scaled by tanh(gamma). With gamma = 0 and LoRA B = 0 the whole model
reduces exactly to its frozen, injection-free form.
"""
import numpy as np

from eyexin import tensor as T
from eyexin import vocab
from eyexin.fusion import fuse
from eyexin.llm import EyexinModel, ModelConfig

rng = np.random.default_rng(0)
a, b = rng.normal(size=(5, 8)), rng.normal(size=(5, 8))
alpha = np.array([[0.0], [0.25], [0.5], [0.75], [1.0]])
out = fuse(T.Tensor(a), T.Tensor(b), T.Tensor(alpha)).data
print("row 0 equals the general stream:", np.array_equal(out[0], a[0]))
print("row 4 equals the expert stream: ", np.array_equal(out[4], b[4]))
print("inside the elementwise hull:    ",
      bool(np.all((out >= np.minimum(a, b) - 1e-15) & (out <= np.maximum(a, b) + 1e-15))))

images = rng.random((2, 4, 32, 32))
ids = np.array([[vocab.QUESTION_ID, 4, 5]] * 2)
full = EyexinModel(ModelConfig())
plain = EyexinModel(ModelConfig(), lora=False)
same = full.forward(images, ids).data.tobytes() == plain.forward(images, ids, use_injection=False).data.tobytes()
print("\nidentity at init (bitwise):", same)

for layer in full.injections.values():
    layer.gamma.data[:] = 0.5
moved = np.abs(full.forward(images, ids).data - plain.forward(images, ids, use_injection=False).data)
print("with gamma = 0.5 the logits move by up to", f"{moved.max():.3g}")
