"""
Materializa ℰ(W) para el W-ésimo simple de F_pG, grado por grado hasta la cota.

Uso:
    python manage.py fiber -g C7 -p 2 -w 1 -b 6
"""

from app_representaciones.domain.errores import ErrorIndice
from app_representaciones.management.base import ComandoModular, renderizar_tabla
from app_representaciones.services.clasificacion import fiber
from app_representaciones.services.cuerpos import make_field
from app_representaciones.services.meataxe import simple_modules


class Command(ComandoModular):
    help = "Lista los pares (K, V) de ℰ(W) con GF(p^n), n ≤ cota, para un simple W de F_pG."
    operacion = "fiber"

    def agregar_argumentos(self, parser):
        parser.add_argument("-w", type=int, required=True, help="Índice de W en la salida de `simples`")
        parser.add_argument("-b", "--cota", type=int, default=None, help="Cota de grado (default: COTA_GRADO)")

    def partes_extra(self, options):
        return {"w": options["w"]}

    def calcular(self, config, G, options):
        simples = simple_modules(G, make_field(config.p, 1), config.semilla)
        w = options["w"]
        if not 0 <= w < len(simples):
            raise ErrorIndice(f"W = {w} fuera de rango: hay {len(simples)} simples.")
        W = simples.modules[w]
        entradas = fiber(W, config.cota_grado, config.semilla)
        return {
            "group": G.etiqueta,
            "p": config.p,
            "w": w,
            "dim_w": W.dim,
            "degree_bound": config.cota_grado,
            "entradas": [{"n": e.entry.field.n, **e.to_dict()} for e in entradas],
        }

    def tabla(self, documento):
        filas = [
            {
                "n": e["n"],
                "dim": e["dim"],
                "orbita": e["orbita"],
                "multiplicidad": e["multiplicidad"],
                "abs_simple": e["absolutamente_simple"],
                "abs_indesc": e["absolutamente_indescomponible"],
            }
            for e in documento["entradas"]
        ]
        return "\n".join([
            f"ℰ(W{documento['w']}) de {documento['group']}, p = {documento['p']}, dim W = {documento['dim_w']}",
            renderizar_tabla(filas, ["n", "dim", "orbita", "multiplicidad", "abs_simple", "abs_indesc"]),
        ])
