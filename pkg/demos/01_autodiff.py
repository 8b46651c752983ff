"""
Reverse-mode gradients on a small expression
============================================

Build a scalar from a few ops, run the tape backwards and compare each
gradient with central differences.
"""
import numpy as np

from eyexin import tensor as T

rng = np.random.default_rng(0)
x = T.Tensor(rng.normal(size=(3, 2)), requires_grad=True)
w = T.Tensor(rng.normal(size=(2, 2)), requires_grad=True)

def f(x, w):
    return T.mean(T.tanh(x @ w) * T.sigmoid(T.slice_axis(x, 1, 0, 2)))

with T.Tape() as tape:
    loss = f(x, w)
grads = tape.backward(loss)
print("loss", loss.item())

# central differences, one coordinate at a time
h = 1e-5
for name, leaf in (("x", x), ("w", w)):
    numeric = np.zeros_like(leaf.data)
    for i in np.ndindex(leaf.shape):
        old = leaf.data[i]
        leaf.data[i] = old + h
        hi = f(x, w).item()
        leaf.data[i] = old - h
        lo = f(x, w).item()
        leaf.data[i] = old
        numeric[i] = (hi - lo) / (2 * h)
    err = np.abs(grads[leaf] - numeric).max()
    print(f"d loss / d {name}: max abs difference to finite differences {err:.2e}")
