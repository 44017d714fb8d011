"""Hyperbolic codes and their Reed-Muller, Reed-Solomon and cube neighbours
over GF(p^k): exponent-set combinatorics, encoders, unique decoders and an
interpolation list decoder, with brute-force oracles for checking them."""

from .codes import EvaluationCode, code_build, corrupt, encode, interpolate_exact, random_message
from .decoders import CubeDecoder, DecodeResult, RSDecoder, make_decoder
from .field import FieldSpec, gf
from .lattice import (
    ExponentSet,
    build_cube_set,
    build_hyp_set,
    build_rm_set,
    containment_report,
    l_set,
)
from .listdecode import list_decode, max_radius, plan

__version__ = "0.1.0"
