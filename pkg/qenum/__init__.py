"""
Quantum Weight Enumerator Package

Exact weight enumerators of quantum codes and the bounds they feed. The package computes the
ordinary, double and complete weight distributions of a code and of its symplectic dual,
checks the quaternary MacWilliams identities between them, and evaluates Singleton,
Hamming-type and linear-programming bounds for codes with separate X and Z distances.

The package includes:
- Additive codes over F4 and their symplectic duals
- Pauli-basis projector enumeration for small n
- Exact and real-valued Krawtchouk polynomials
- Finite and asymptotic bounds driven by one key inequality
- A command-line interface and an MCP tool server
"""

__version__ = "0.1.0"
