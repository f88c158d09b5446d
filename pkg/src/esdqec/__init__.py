"""Two-qubit entanglement under amplitude damping, with and without QEC.

Pipeline: pure two-qubit state -> encode (none / [4,1]x[4,1] / [6,2]) ->
independent amplitude damping on every physical qubit -> syndrome
measurement and recovery -> logical 4x4 density matrix -> fidelity and
Wootters concurrence.
"""

__version__ = "0.1.0"
