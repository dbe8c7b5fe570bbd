# app_representaciones/use_cases/contar_absolutamente_simples.py
"""
Use case: contar los F̄G-módulos simples a partir de los FG-módulos simples.

Para cada W ∈ ITS(F_pG) se arma Σ⁻¹(W) y se suma su tamaño. El total se
contrasta con la cantidad de clases p-regulares, que funciona como oráculo
independiente.

Se llama desde el comando `count` y desde el verificador por lotes.
"""

import logging

from app_representaciones.domain.resultados import ClassificationReport, FilaClasificacion
from app_representaciones.services.clasificacion import minimal_field, sigma_fiber
from app_representaciones.services.cuerpos import make_field
from app_representaciones.services.grupos import PermGroup, p_regular_class_count
from app_representaciones.services.meataxe import simple_modules

logger = logging.getLogger(__name__)


def ejecutar(G: PermGroup, p: int, seed: int = 0) -> ClassificationReport:
    """
    Args:
        G:    Grupo de permutaciones dentro del tope.
        p:    Característica.
        seed: Semilla del MeatAxe (no cambia el resultado).

    Raises:
        ErrorConsistencia: si alguna fibra Σ⁻¹(W) no tiene dim End(W) elementos.
    """
    F = make_field(p, 1)
    simples = simple_modules(G, F, seed)

    filas = []
    for W, m in zip(simples.modules, simples.end_degrees):
        fibra = sigma_fiber(W, seed)
        filas.append(FilaClasificacion(
            dim=W.dim,
            end_degree=m,
            fiber_size=len(fibra),
            # menor cuerpo donde están definidos todos los de la fibra, por descenso
            splitting_degree=max(minimal_field(X, seed).field.n for X in fibra),
        ))

    reporte = ClassificationReport(
        group=G.etiqueta,
        p=p,
        rows=filas,
        total=sum(f.fiber_size for f in filas),
        oracle=p_regular_class_count(G, p),
    )
    if not reporte.agree:
        logger.warning("%s, p=%d: total %d distinto del oráculo %d", G.etiqueta, p, reporte.total, reporte.oracle)
    else:
        logger.info("%s, p=%d: %d simples absolutos", G.etiqueta, p, reporte.total)
    return reporte
