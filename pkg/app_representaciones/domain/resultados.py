# app_representaciones/domain/resultados.py
"""
Objetos de resultado que devuelven los servicios.

Son dataclasses sin lógica de cálculo; los que viajan a la CLI tienen to_dict().
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Any, Optional

from app_representaciones.domain.enums import Clausula

if TYPE_CHECKING:
    from app_representaciones.services.cuerpos import FiniteField
    from app_representaciones.services.grupos import PermGroup, Subgroup
    from app_representaciones.services.modulos import Rep


# ─── MeatAxe ──────────────────────────────────────────────────────────────────

@dataclass
class SerieComposicion:
    # C con C·ρ(g)·C⁻¹ triangular inferior por bloques; factores en orden de bloque
    cambio_base: Any
    factores: list["Rep"]

    @property
    def dims(self) -> list[int]:
        return [f.dim for f in self.factores]


@dataclass(frozen=True)
class ResultadoSimplicidad:
    es_simple: bool
    certificado: str
    # base (filas) de un subespacio invariante propio cuando no es simple
    testigo: Optional[Any] = None

    def __bool__(self):
        return self.es_simple


@dataclass(frozen=True)
class ResultadoIsomorfismo:
    isomorfos: bool
    certificado: str
    # matriz invertible M con ρ_V(g)·M = M·ρ_U(g) cuando son isomorfos
    intertwiner: Optional[Any] = None

    def __bool__(self):
        return self.isomorfos


@dataclass(frozen=True)
class EstructuraEndomorfismos:
    dim_end: int
    dim_radical: int
    es_local: bool

    @property
    def dim_cociente(self) -> int:
        return self.dim_end - self.dim_radical


@dataclass
class Decomposition:
    # (representante, multiplicidad), tipos dos a dos no isomorfos, en orden canónico
    summands: list[tuple["Rep", int]]
    basis_change: Any
    # un bloque por sumando concreto, en el orden de basis_change: (índice de tipo, dim)
    bloques: list[tuple[int, int]] = field(default_factory=list)

    def tipos(self) -> list["Rep"]:
        return [rep for rep, _ in self.summands]

    def total_componentes(self) -> int:
        return sum(mult for _, mult in self.summands)


@dataclass
class SimpleSet:
    group: "PermGroup"
    field: "FiniteField"
    modules: list["Rep"]
    end_degrees: list[int]

    def __len__(self):
        return len(self.modules)

    def to_dict(self):
        return {
            "simples": [
                {"indice": i, "dim": rep.dim, "grado_end": m}
                for i, (rep, m) in enumerate(zip(self.modules, self.end_degrees))
            ],
        }


# ─── Green ────────────────────────────────────────────────────────────────────

@dataclass(frozen=True)
class ResultadoProyectividad:
    proyectivo: bool
    certificado: str
    # φ ∈ End_Q(Res_Q V) con traza relativa = Id
    phi: Optional[Any] = None

    def __bool__(self):
        return self.proyectivo


@dataclass(frozen=True)
class VertexSourcePair:
    vertex: "Subgroup"
    source: "Rep"


# ─── Clasificación ────────────────────────────────────────────────────────────

@dataclass(frozen=True)
class ClassifiedModule:
    """Par (K, V) que representa al F̄G-módulo V ⊗_K F̄."""
    field: "FiniteField"
    module: "Rep"
    absolutely_simple: bool
    absolutely_indecomposable: bool

    def to_dict(self):
        return {
            "cuerpo": {"p": self.field.p, "n": self.field.n},
            "dim": self.module.dim,
            "absolutamente_simple": self.absolutely_simple,
            "absolutamente_indescomponible": self.absolutely_indecomposable,
        }


@dataclass(frozen=True)
class FiberEntry:
    entry: ClassifiedModule
    galois_orbit_index: int
    multiplicity: int

    def to_dict(self):
        return {
            **self.entry.to_dict(),
            "orbita": self.galois_orbit_index,
            "multiplicidad": self.multiplicity,
        }


@dataclass(frozen=True)
class FilaClasificacion:
    dim: int
    end_degree: int
    fiber_size: int
    splitting_degree: int

    def to_dict(self):
        return {
            "dim": self.dim,
            "end_degree": self.end_degree,
            "fiber_size": self.fiber_size,
            "splitting_degree": self.splitting_degree,
        }


@dataclass
class ClassificationReport:
    group: str
    p: int
    rows: list[FilaClasificacion]
    total: int
    oracle: int

    @property
    def agree(self) -> bool:
        return self.total == self.oracle

    def to_dict(self):
        return {
            "group": self.group,
            "p": self.p,
            "rows": [fila.to_dict() for fila in self.rows],
            "total": self.total,
            "oracle": self.oracle,
            "agree": self.agree,
        }


@dataclass
class ResultadoClausula:
    clausula: Clausula
    instancias: int = 0
    fallas: list[str] = field(default_factory=list)

    @property
    def aprobada(self) -> bool:
        return not self.fallas

    def registrar(self, ok: bool, detalle: str):
        self.instancias += 1
        if not ok:
            self.fallas.append(detalle)

    def absorber(self, otra: "ResultadoClausula"):
        self.instancias += otra.instancias
        self.fallas.extend(otra.fallas)

    def to_dict(self):
        return {
            "clausula": self.clausula.value,
            "descripcion": self.clausula.label,
            "aprobada": self.aprobada,
            "instancias": self.instancias,
            "fallas": list(self.fallas),
        }


@dataclass
class ReporteVerificacion:
    group: str
    p: int
    degree_bound: int
    seed: int
    clausulas: list[ResultadoClausula]

    @property
    def all_passed(self) -> bool:
        return all(c.aprobada for c in self.clausulas)

    def to_dict(self):
        return {
            "group": self.group,
            "p": self.p,
            "degree_bound": self.degree_bound,
            "seed": self.seed,
            "clausulas": [c.to_dict() for c in self.clausulas],
            "all_passed": self.all_passed,
        }
