"""Registry of anchors: the statement each check verifies."""

from __future__ import annotations

from .models import Report

ANCHORS: dict[str, str] = {
    # exchange matrices and triangulations
    "exmat.involution": "mutation is an involution: μ_k μ_k ε = ε",
    "exmat.relations": "exchange matrices return to themselves along R1–R5",
    "exmat.kernel": "θ-vectors lie in the integer kernel of ε",
    "tri.coherence": "flips of ideal triangulations induce mutation of ε",
    "tri.punctured_torus": "once-punctured torus: ε = [[0,2,−2],[−2,0,2],[2,−2,0]], θ = (2,2,2)",
    # classical
    "classical.relations": "classical Λ-mutations compose to the identity along R1–R5",
    "classical.poisson": "{μ*Z'_i, μ*Z'_j} = ℓ ε'_ij μ*Z'_i μ*Z'_j",
    "classical.center": "Z^θ is central in the log-canonical bracket",
    "classical.laurent": "composite A-variable mutations are Laurent polynomials in the initial A-variables",
    "classical.ensemble": "p*X_i = Π A_j^{ε_ij} intertwines X- and A-mutation",
    "classical.lambda_points": "Λ-mutation maps positive points of R_Λ to positive points and μ_kμ_k fixes them",
    # quantum
    "quantum.limit": "classical limit of quantum mutation is classical mutation",
    "quantum.psi_difference": "ψ(q²x) = (1 + qx)ψ(x) as formal series",
    "quantum.psi_pentagon": "ψ(X)ψ(Y) = ψ(Y)ψ(q^{-1}XY)ψ(X) for XY = q²YX",
    "quantum.sharp_conjugation": "μ♯_k is conjugation by ψ(X_k)",
    "quantum.matrix_relations": "quantum relations hold in finite clock-and-shift models",
    "quantum.doubled": "μ_kμ_k is the identity on the Λ-doubled quantum torus",
    # quantum dilogarithm
    "qdilog.poles": "zeros and poles of Φ^h on ±((2n+1)πi + (2m+1)πih)",
    "qdilog.difference": "difference equations of Φ^h in steps 2πi and 2πih",
    "qdilog.involutivity": "Φ^h(z)Φ^h(−z) = c_h e^{z²/(4πih)}",
    "qdilog.compact_ratio": "Φ^h as a ratio of compact quantum dilogarithms for Im h > 0",
    "qdilog.conjugation": "conj Φ^h(z) · Φ^{h̄}(z̄) = 1",
    "qdilog.contour": "Φ^h does not depend on the admissible contour",
    "qdilog.unitarity": "|Φ^h(x)| = 1 for real h and x",
    "qdilog.f0_contour": "F₀ equals its contour-integral form",
    "qdilog.f0_difference": "F₀(x, y+πi) = (1+e^x) F₀(x, y)",
    "qdilog.f_lambda": "F_Λ is unitary and involutive",
    # operators
    "opsim.symbols": "Heisenberg brackets of x, y, x̊, x̃ and the doubled z operators",
    "opsim.kprime": "conjugation action of K′ on x, y, x̊, x̃",
    "opsim.weyl": "Weyl relation e^{iαx}e^{iβy} = e^{−2πiℏαβ}e^{iβy}e^{iαx}",
    "opsim.sum_exponential": "e^{iβ(x+y)} through the chirp factorisation matches its closed form",
    "opsim.pentagon_minus1": "Φ^ℏ(x)Φ^ℏ(y) = Φ^ℏ(y)Φ^ℏ(x+y)Φ^ℏ(x)",
    "opsim.pentagon_f_lambda": "F_Λ(x,y)F_Λ(x',y') = F_Λ(x',y')F_Λ(x+x',y+y')F_Λ(x,y)",
    "opsim.substitution": "the F₀ pentagon as equal substitution maps",
    "opsim.f0_conjugation": "conjugation identities of F₀(x_k, y_k)",
    # negative controls
    "control.negative": "identities with a factor removed or a sign flipped must fail",
}


def anchor(key: str) -> str:
    """Registered anchor text for key.

    Raises:
        KeyError: If the key is not registered
    """
    if key not in ANCHORS:
        raise KeyError(f"Unregistered anchor: {key}")
    return ANCHORS[key]


def lint_anchors(report: Report) -> list[str]:
    """Anchors used by the report that are not in the registry."""
    registered = set(ANCHORS.values())
    return sorted({record.anchor for record in report.records if record.anchor not in registered})
