"""vqe-bench package root."""

__all__ = [
    "ansatz",
    "bench",
    "objective",
    "optimize",
    "oracle",
    "pauli",
    "sim",
]
