"""
Racah 代数
差分作用素による実現、構造定数、関係式・Casimir・スペクトルの検証、
縮約表示と equitable 表示への変換
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from checks import (FAIL, ORACLE, PAPER_CLAIM, PASS, STRUCTURAL, CheckEntry, CheckReport, equality_entry,
                    residual_entry, skipped_entry, value_entry)
from exact import RatMatrix, RationalLike, char_poly, commutator, format_rational, poly_from_roots, to_rational
from grids import RacahGrid, build_difference_operator, racah_grid
from relalg import (UNKNOWN, Assignment, check_central, evaluate, evaluate_expression, fit_constants,
                    load_fixture, parse_expression)

from .errors import PreconditionError

# ロガー設定
logger = logging.getLogger(__name__)

SUITE = "racah"

# 切断条件
ALPHA_TRUNC = "alpha"
BETA_DELTA_TRUNC = "beta_delta"
GAMMA_TRUNC = "gamma"
TRUNCATIONS = (ALPHA_TRUNC, BETA_DELTA_TRUNC, GAMMA_TRUNC)

CONSTANT_NAMES = ("a1", "a2", "b", "c1", "c2", "d1", "d2")

RACAH_CASIMIR = (
    "a1 {K1^2, K2} + a2 {K1, K2^2} + (a1 a2 + b) {K1, K2}"
    " + (a1^2 + c1) K1^2 + (a2^2 + c2) K2^2 + K3^2"
    " + (a1 b + 2 d1) K1 + (a2 b + 2 d2) K2"
)

REDUCED_CASIMIR = (
    "{R1^2, R2} + {R1, R2^2} + R1^2 + R2^2 + R3^2"
    " + (d + 1) {R1, R2} + (2 e1 + d) R1 + (2 e2 + d) R2"
)


@dataclass(frozen=True)
class RacahParams:
    """Racah 作用素のパラメータと切断条件"""
    alpha: Fraction
    beta: Fraction
    gamma: Fraction
    delta: Fraction
    N: int
    truncation: str = ALPHA_TRUNC

    def __post_init__(self):
        for name in ("alpha", "beta", "gamma", "delta"):
            object.__setattr__(self, name, to_rational(getattr(self, name)))
        if self.truncation not in TRUNCATIONS:
            raise PreconditionError(f"不明な切断条件: {self.truncation} (有効: {', '.join(TRUNCATIONS)})")
        if not isinstance(self.N, int) or self.N < 0:
            raise PreconditionError(f"N は非負整数である必要があります: {self.N!r}")
        if self.truncation_value() != -self.N:
            raise PreconditionError(
                f"切断条件 {self.truncation} が成り立ちません: {format_rational(self.truncation_value())} != -{self.N}")

    def truncation_value(self) -> Fraction:
        if self.truncation == ALPHA_TRUNC:
            return self.alpha + 1
        if self.truncation == BETA_DELTA_TRUNC:
            return self.beta + self.delta + 1
        return self.gamma + 1

    def eigenvalue(self, n: int) -> Fraction:
        """n(n+α+β+1)"""
        return n * (n + self.alpha + self.beta + 1)

    def eigenvalues(self) -> List[Fraction]:
        return [self.eigenvalue(n) for n in range(self.N + 1)]

    def to_dict(self) -> Dict[str, str]:
        return {
            "alpha": format_rational(self.alpha),
            "beta": format_rational(self.beta),
            "gamma": format_rational(self.gamma),
            "delta": format_rational(self.delta),
            "N": str(self.N),
            "truncation": self.truncation,
        }


def complete_racah_params(free: Dict[str, RationalLike], N: int, truncation: str) -> RacahParams:
    """
    切断条件で決まるパラメータを補って RacahParams を作る

    Args:
        free: 切断条件で決まらない3つのパラメータ（alpha/beta/gamma/delta のうち）
        N: 格子サイズ
        truncation: 'alpha' なら α、'beta_delta' なら β、'gamma' なら γ を決める
    """
    values = {k: to_rational(v) for k, v in free.items()}
    if truncation == ALPHA_TRUNC:
        values["alpha"] = Fraction(-N - 1)
    elif truncation == BETA_DELTA_TRUNC:
        values["beta"] = -N - 1 - values["delta"]
    elif truncation == GAMMA_TRUNC:
        values["gamma"] = Fraction(-N - 1)
    else:
        raise PreconditionError(f"不明な切断条件: {truncation}")
    return RacahParams(values["alpha"], values["beta"], values["gamma"], values["delta"], N, truncation)


@dataclass(frozen=True)
class RacahConstants:
    """構造定数（b, d1, d2, C は単位元に掛かるスカラー）"""
    a1: Fraction
    a2: Fraction
    b: Fraction
    c1: Fraction
    c2: Fraction
    d1: Fraction
    d2: Fraction
    C: Fraction

    def as_scalars(self) -> Dict[str, Fraction]:
        return {name: getattr(self, name) for name in CONSTANT_NAMES}

    @classmethod
    def from_scalars(cls, values: Dict[str, Fraction], C: Fraction) -> "RacahConstants":
        return cls(*(values[name] for name in CONSTANT_NAMES), C=C)


def racah_constants(params: RacahParams) -> RacahConstants:
    """実現のパラメータから構造定数の閉じた式を計算"""
    al, be, ga, de = params.alpha, params.beta, params.gamma, params.delta
    c1 = -(ga + de) * (ga + de + 2)
    c2 = -(al + be) * (al + be + 2)
    d1 = -(al + 1) * (ga + 1) * (be + de + 1) * (ga + de)
    d2 = -(al + 1) * (ga + 1) * (al + be) * (be + de + 1)
    b = 2 * (be * (de - al) - (al + be) * (ga + de + 2) - 2 * (ga + 1) * (de + 1))
    C = (al + 1) * (ga + 1) * (be + de + 1) * (
        2 * be * de - 2 * al + be * (al + 1) * (ga - 1) + (al - 1) * (ga + 1) * (de + 1))
    return RacahConstants(Fraction(-2), Fraction(-2), b, c1, c2, d1, d2, C)


@dataclass(frozen=True)
class RacahRealization:
    """K1 ↦ Y（差分作用素）, K2 ↦ X（掛け算作用素）"""
    X: RatMatrix
    Y: RatMatrix
    K3: RatMatrix
    grid: RacahGrid
    params: RacahParams
    constants: RacahConstants
    B_values: Tuple[Fraction, ...] = field(default=(), compare=False)
    D_values: Tuple[Fraction, ...] = field(default=(), compare=False)

    @property
    def generators(self) -> Dict[str, RatMatrix]:
        return {"K1": self.Y, "K2": self.X, "K3": self.K3}

    def assignment(self, scalars: Optional[Dict[str, object]] = None) -> Assignment:
        return Assignment(self.generators, scalars if scalars is not None else self.constants.as_scalars())


def racah_coefficients(params: RacahParams, grid: RacahGrid) -> Tuple[List[Fraction], List[Fraction]]:
    """差分作用素の係数 B(x), D(x)"""
    al, be, ga, de = params.alpha, params.beta, params.gamma, params.delta
    B, D = [], []
    for x, theta in zip(range(grid.size), grid.theta_values):
        B.append((x + al + 1) * (x + be + de + 1) * (x + ga + 1) * (x + ga + de + 1)
                 / ((theta + 1) * (theta + 2)))
        D.append(x * (x - al + ga + de) * (x - be + ga) * (x + de) / (theta * (theta + 1)))
    return B, D


def racah_realization(params: RacahParams) -> RacahRealization:
    """
    Racah 代数の標準実現を構成

    Args:
        params: 切断条件を満たすパラメータ

    Returns:
        X = diag(λ), Y = B Δ - D ∇, K3 = [Y, X] と構造定数

    Raises:
        GridConstructionError: 格子の不変条件違反
        ClosureError: 端点係数が零でない
    """
    grid = racah_grid(params.gamma, params.delta, params.N)
    B, D = racah_coefficients(params, grid)
    Y = build_difference_operator(B, D, grid, provenance="Racah Y").matrix
    X = RatMatrix.diagonal(grid.lambda_values)
    logger.debug(f"Racah実現構成: {params.to_dict()}")
    return RacahRealization(X, Y, commutator(Y, X), grid, params, racah_constants(params),
                            tuple(B), tuple(D))


def fit_racah_constants(real: RacahRealization):
    """a1, a2, b, c1, c2, d1, d2 をすべて未知として当てはめる"""
    scalars = {name: UNKNOWN for name in CONSTANT_NAMES}
    return fit_constants(load_fixture("racah"), real.assignment(scalars))


def _working_constants(real: RacahRealization, fit=None) -> Dict[str, Fraction]:
    """一意に当てはまればその値、そうでなければ閉じた式の値"""
    fit = fit if fit is not None else fit_racah_constants(real)
    if fit.unique:
        return dict(fit.values)
    return real.constants.as_scalars()


def verify_racah(real: RacahRealization) -> CheckReport:
    """
    Racah 代数の関係式を検証

    閉じた式の定数で関係式を評価し（記載式）、別途すべての定数を未知として
    当てはめた値（オラクル）と比較する。Jacobi 恒等式は対照として評価する。
    """
    report = CheckReport()
    pres = load_fixture("racah")
    asg = real.assignment()
    categories = {"k3": STRUCTURAL, "jacobi": STRUCTURAL}
    for rel in pres.relations:
        report.add(residual_entry(SUITE, f"relation_{rel.label}", "racah relations",
                                  categories.get(rel.label, PAPER_CLAIM), evaluate(rel, asg)))

    fit = fit_racah_constants(real)
    report.add(CheckEntry(SUITE, "fit_constants", "racah relations", ORACLE,
                          PASS if fit.solvable and all(fit.residuals_zero.values()) else FAIL,
                          witness=fit.to_dict()))
    report.record_constants(SUITE, {**fit.values, "status": fit.status})
    claimed = real.constants.as_scalars()
    for name in CONSTANT_NAMES:
        check = f"constant_{name}"
        if not fit.unique:
            report.add(skipped_entry(SUITE, check, "racah constants", PAPER_CLAIM,
                                     f"当てはめが一意でありません ({fit.status})"))
            continue
        report.add(value_entry(SUITE, check, "racah constants", PAPER_CLAIM,
                               claimed[name], fit.values[name]))
    return report


def casimir_racah(real: RacahRealization) -> Tuple[RatMatrix, CheckReport]:
    """
    三次 Casimir 元 C を構成し、中心性・スカラー性・閉じた式を検証

    Returns:
        (C の行列, 検証レポート)
    """
    report = CheckReport()
    scalars = _working_constants(real)
    expr = parse_expression(RACAH_CASIMIR, ("K1", "K2", "K3"), CONSTANT_NAMES)
    C = evaluate_expression(expr, real.assignment(scalars))
    report.add(check_central(C, real.generators, SUITE, "casimir_central", "racah casimir"))
    value = C.scalar_value()
    report.add(CheckEntry(SUITE, "casimir_scalar", "racah casimir", ORACLE,
                          PASS if value is not None else FAIL,
                          witness=None if value is not None else {"diagonal": [format_rational(v) for v in C.diagonal_values()]}))
    if value is None:
        report.add(skipped_entry(SUITE, "casimir_value", "racah casimir", PAPER_CLAIM,
                                 "C がスカラー行列ではありません"))
    else:
        report.add(value_entry(SUITE, "casimir_value", "racah casimir", PAPER_CLAIM,
                               real.constants.C, value))
    return C, report


@dataclass(frozen=True)
class ReducedRacah:
    """縮約 Racah 代数の生成元 R1, R2, R3 と中心元 d, e1, e2"""
    R1: RatMatrix
    R2: RatMatrix
    R3: RatMatrix
    d: Fraction
    e1: Fraction
    e2: Fraction
    source: RacahRealization
    constants: Dict[str, Fraction] = field(default_factory=dict, compare=False)

    @property
    def generators(self) -> Dict[str, RatMatrix]:
        return {"R1": self.R1, "R2": self.R2, "R3": self.R3}

    def central(self) -> Dict[str, Fraction]:
        return {"d": self.d, "e1": self.e1, "e2": self.e2}


def reduced_central(constants: Dict[str, Fraction]) -> Dict[str, Fraction]:
    """構造定数から d, e1, e2 を計算"""
    a1, a2, b = constants["a1"], constants["a2"], constants["b"]
    c1, c2, d1, d2 = constants["c1"], constants["c2"], constants["d1"], constants["d2"]
    return {
        "d": (a2 * a1 * b - a1 ** 2 * c2 - a2 ** 2 * c1) / (a1 ** 2 * a2 ** 2),
        "e1": (-2 * a1 * c1 * b + a2 * c1 ** 2 + 4 * a1 ** 2 * d1) / (4 * a1 ** 4 * a2),
        "e2": (-2 * a2 * b * c2 + a1 * c2 ** 2 + 4 * a2 ** 2 * d2) / (4 * a1 * a2 ** 4),
    }


def to_reduced(real: RacahRealization) -> Tuple[ReducedRacah, CheckReport]:
    """
    アフィン変換で縮約表示へ移す

    Raises:
        PreconditionError: a1 または a2 が零
    """
    report = CheckReport()
    constants = _working_constants(real)
    a1, a2, c1, c2 = constants["a1"], constants["a2"], constants["c1"], constants["c2"]
    if a1 == 0 or a2 == 0:
        raise PreconditionError(f"a1, a2 が零でないことが必要です: a1={a1}, a2={a2}")
    n = real.X.dim
    R1 = (real.Y + RatMatrix.scalar(n, c2 / (2 * a2))) * (1 / a2)
    R2 = (real.X + RatMatrix.scalar(n, c1 / (2 * a1))) * (1 / a1)
    R3 = real.K3 * (1 / (a1 * a2))
    central = reduced_central(constants)
    reduced = ReducedRacah(R1, R2, R3, central["d"], central["e1"], central["e2"], real, constants)

    pres = load_fixture("reduced_racah")
    asg = Assignment(reduced.generators, central)
    for rel in pres.relations:
        category = STRUCTURAL if rel.label == "r3" else PAPER_CLAIM
        report.add(residual_entry(SUITE, f"reduced_{rel.label}", "reduced racah", category,
                                  evaluate(rel, asg)))

    fit = fit_constants(pres, Assignment(reduced.generators, {k: UNKNOWN for k in central}))
    report.add(CheckEntry(SUITE, "reduced_fit", "reduced racah", ORACLE,
                          PASS if fit.solvable and all(fit.residuals_zero.values()) else FAIL,
                          witness=fit.to_dict()))
    report.record_constants(f"{SUITE}.reduced", {**fit.values, "status": fit.status})
    for name, value in central.items():
        if fit.unique:
            report.add(value_entry(SUITE, f"reduced_{name}", "reduced racah", PAPER_CLAIM,
                                   value, fit.values[name]))
        else:
            report.add(skipped_entry(SUITE, f"reduced_{name}", "reduced racah", PAPER_CLAIM,
                                     f"当てはめが一意でありません ({fit.status})"))

    casimir = evaluate_expression(parse_expression(REDUCED_CASIMIR, ("R1", "R2", "R3"), ("d", "e1", "e2")),
                                  asg)
    report.add(check_central(casimir, reduced.generators, SUITE, "reduced_casimir_central", "reduced racah"))
    report.add(CheckEntry(SUITE, "reduced_casimir_scalar", "reduced racah", ORACLE,
                          PASS if casimir.scalar_value() is not None else FAIL))
    return reduced, report


@dataclass(frozen=True)
class EquitableRacah:
    """equitable 表示の生成元"""
    V1: RatMatrix
    V2: RatMatrix
    V3: RatMatrix
    P: RatMatrix

    @property
    def generators(self) -> Dict[str, RatMatrix]:
        return {"V1": self.V1, "V2": self.V2, "V3": self.V3, "P": self.P}


def to_equitable(reduced: ReducedRacah) -> Tuple[EquitableRacah, CheckReport]:
    """
    V1 = -2R1, V2 = -2R2, V3 = 2(R1+R2+d), P = 2R3 を構成して検証し、
    χ で元の K1, K2, K3 に戻ることを確かめる
    """
    report = CheckReport()
    n = reduced.R1.dim
    eq = EquitableRacah(
        V1=reduced.R1 * -2,
        V2=reduced.R2 * -2,
        V3=(reduced.R1 + reduced.R2 + RatMatrix.scalar(n, reduced.d)) * 2,
        P=reduced.R3 * 2,
    )
    asg = Assignment(eq.generators, reduced.central())
    categories = {"sum": STRUCTURAL, "p12": ORACLE, "p23": ORACLE, "p31": ORACLE}
    for rel in load_fixture("equitable").relations:
        report.add(residual_entry(SUITE, f"equitable_{rel.label}", "equitable presentation",
                                  categories.get(rel.label, PAPER_CLAIM), evaluate(rel, asg)))

    constants = reduced.constants
    a1, a2, c1, c2 = constants["a1"], constants["a2"], constants["c1"], constants["c2"]
    real = reduced.source
    images = {
        "K1": eq.V1 * (-a2 / 2) - RatMatrix.scalar(n, c2 / (2 * a2)),
        "K2": eq.V2 * (-a1 / 2) - RatMatrix.scalar(n, c1 / (2 * a1)),
        "K3": eq.P * (a1 * a2 / 2),
    }
    for name, image in images.items():
        report.add(equality_entry(SUITE, f"chi_{name}", "equitable isomorphism", PAPER_CLAIM,
                                  real.generators[name], image))
    return eq, report


def verify_racah_spectrum(real: RacahRealization) -> CheckEntry:
    """
    char_poly(Y) と ∏ (t - n(n+α+β+1)) を係数ごとに比較

    Raises:
        PreconditionError: 固有値が重複する
    """
    eigenvalues = real.params.eigenvalues()
    if len(set(eigenvalues)) != len(eigenvalues):
        raise PreconditionError(
            f"固有値 n(n+α+β+1) が重複しています: {[format_rational(v) for v in eigenvalues]}")
    expected = poly_from_roots(eigenvalues)
    actual = char_poly(real.Y)
    if expected == actual:
        return CheckEntry(SUITE, "spectrum", "racah eigenvalues", ORACLE, PASS)
    mismatch = next(k for k, (e, a) in enumerate(zip(expected, actual)) if e != a)
    return CheckEntry(SUITE, "spectrum", "racah eigenvalues", ORACLE, FAIL,
                      witness={"coefficient": mismatch,
                               "expected": format_rational(expected[mismatch]),
                               "actual": format_rational(actual[mismatch])})


def run_racah_suite(params: RacahParams) -> CheckReport:
    """Racah スイート一式（実現・関係式・Casimir・縮約・equitable・スペクトル）"""
    report = CheckReport()
    real = racah_realization(params)
    report.merge(verify_racah(real))
    report.merge(casimir_racah(real)[1])
    reduced, reduced_report = to_reduced(real)
    report.merge(reduced_report)
    report.merge(to_equitable(reduced)[1])
    try:
        report.add(verify_racah_spectrum(real))
    except PreconditionError as e:
        report.add(skipped_entry(SUITE, "spectrum", "racah eigenvalues", ORACLE, str(e)))
    report.record_constants(f"{SUITE}.params", params.to_dict())
    return report
