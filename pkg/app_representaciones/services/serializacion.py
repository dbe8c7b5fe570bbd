# app_representaciones/services/serializacion.py
"""
Documentos JSON de cuerpos, grupos y módulos.

- Cuerpo: {p, n, min_poly} (coeficientes, constante primero)
- Elemento: vector de coeficientes, constante primero
- Grupo: {"catalogo": nombre} o {degree, generators 1-based}
- Módulo: {group, field, dim, matrices}; una matriz por generador, por filas
"""

import hashlib
import json
from pathlib import Path
from typing import Union

import numpy as np
from django.core.serializers.json import DjangoJSONEncoder

from app_representaciones.domain.errores import ErrorEntrada
from app_representaciones.services.catalogo import CATALOGO, es_del_catalogo, grupo_por_nombre
from app_representaciones.services.cuerpos import FiniteField, make_field
from app_representaciones.services.grupos import PermGroup, en_ciclos, group_from_generators
from app_representaciones.services.modulos import Rep, rep_from_matrices


# ─────────────────────────────────────────────────────────────────────────────
# JSON
# ─────────────────────────────────────────────────────────────────────────────

def a_json(documento) -> str:
    """Texto canónico: claves ordenadas, sangría fija."""
    return json.dumps(documento, sort_keys=True, indent=2, ensure_ascii=False, cls=DjangoJSONEncoder)


def digest(documento) -> str:
    canonico = json.dumps(documento, sort_keys=True, separators=(",", ":"), cls=DjangoJSONEncoder)
    return hashlib.sha256(canonico.encode()).hexdigest()


def leer_documento(ruta: Union[str, Path]) -> dict:
    """
    Lanza:
        ErrorEntrada si el archivo no existe o no es JSON válido.
    """
    ruta = Path(ruta)
    try:
        return json.loads(ruta.read_text(encoding="utf-8"))
    except FileNotFoundError:
        raise ErrorEntrada(f"No existe el archivo {ruta} (ni es un grupo del catálogo).") from None
    except (OSError, json.JSONDecodeError) as e:
        raise ErrorEntrada(f"No se pudo leer {ruta}: {e}") from e


# ─────────────────────────────────────────────────────────────────────────────
# Cuerpos y matrices
# ─────────────────────────────────────────────────────────────────────────────

def cuerpo_desde_documento(doc: dict) -> FiniteField:
    try:
        K = make_field(int(doc["p"]), int(doc["n"]))
    except (KeyError, TypeError, ValueError) as e:
        raise ErrorEntrada(f"Cuerpo mal formado: {doc!r}") from e
    if "min_poly" in doc and tuple(doc["min_poly"]) != K.min_poly:
        raise ErrorEntrada(
            f"Solo se admite el polinomio canónico de {K}: {list(K.min_poly)} (llegó {doc['min_poly']})."
        )
    return K


def matriz_a_documento(K: FiniteField, M) -> list:
    return K.digitos(M).tolist()


def matriz_desde_documento(K: FiniteField, filas, dim: int):
    arreglo = np.asarray(filas, dtype=np.int64)
    if dim == 0:
        return K.gf.Zeros((0, 0))
    if arreglo.shape != (dim, dim, K.n):
        raise ErrorEntrada(f"Se esperaba una matriz {dim}×{dim} de vectores de {K.n} coeficientes.")
    if arreglo.min() < 0 or arreglo.max() >= K.p:
        raise ErrorEntrada(f"Coeficientes fuera de [0, {K.p}).")
    return K.desde_digitos(arreglo)


# ─────────────────────────────────────────────────────────────────────────────
# Grupos
# ─────────────────────────────────────────────────────────────────────────────

def grupo_a_documento(G: PermGroup) -> dict:
    if G.nombre in CATALOGO and grupo_por_nombre(G.nombre).generators == G.generators:
        return {"catalogo": G.nombre}
    return G.to_dict()


def grupo_desde_documento(doc: dict) -> PermGroup:
    if "catalogo" in doc:
        if not es_del_catalogo(str(doc["catalogo"])):
            raise ErrorEntrada(f"'{doc['catalogo']}' no está en el catálogo ({', '.join(CATALOGO)}).")
        return grupo_por_nombre(str(doc["catalogo"]))
    try:
        return group_from_generators(int(doc["degree"]), doc["generators"], nombre=doc.get("nombre", ""))
    except (KeyError, TypeError) as e:
        raise ErrorEntrada(f"Grupo mal formado: falta {e}") from e


def subgrupo_a_documento(Q: PermGroup) -> dict:
    return {
        "order": Q.order,
        "generators": [[i + 1 for i in g] for g in Q.generators],
        "ciclos": [en_ciclos(g) for g in Q.generators],
    }


# ─────────────────────────────────────────────────────────────────────────────
# Módulos
# ─────────────────────────────────────────────────────────────────────────────

def modulo_a_documento(V: Rep) -> dict:
    return {
        "group": grupo_a_documento(V.group),
        "field": V.field.to_dict(),
        "dim": V.dim,
        "matrices": [matriz_a_documento(V.field, M) for M in V.matrices],
    }


def modulo_desde_documento(doc: dict, grupo: PermGroup = None) -> Rep:
    """
    Lanza:
        ErrorEntrada si el documento está mal formado o las matrices no
        respetan las relaciones del grupo.
    """
    try:
        G = grupo or grupo_desde_documento(doc["group"])
        K = cuerpo_desde_documento(doc["field"])
        dim = int(doc["dim"])
        matrices = [matriz_desde_documento(K, M, dim) for M in doc["matrices"]]
    except KeyError as e:
        raise ErrorEntrada(f"Documento de módulo mal formado: falta {e}") from e
    return rep_from_matrices(G, K, matrices, dim=dim)


def leer_modulo(ruta: Union[str, Path]) -> Rep:
    """Acepta un documento de módulo suelto o la salida estructurada de un comando que lo trae en "modulo"."""
    documento = leer_documento(ruta)
    if "modulo" in documento and "matrices" not in documento:
        documento = documento["modulo"]
    return modulo_desde_documento(documento)
