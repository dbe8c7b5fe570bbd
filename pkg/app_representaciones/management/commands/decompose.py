"""
Descomposición de Krull–Schmidt de un módulo leído de archivo.

Uso:
    python manage.py decompose modulo.json
    python manage.py decompose modulo.json --format structured --salida sumandos.json
"""

from app_representaciones.management.base import ComandoModular, renderizar_tabla
from app_representaciones.services.meataxe import decompose, endomorphism_structure
from app_representaciones.services.serializacion import matriz_a_documento, modulo_a_documento


class Command(ComandoModular):
    help = "Descompone un módulo en sumandos indescomponibles agrupados por tipo."
    operacion = "decompose"
    usa_modulo = True

    def calcular(self, config, V, options):
        descomposicion = decompose(V, config.semilla)
        return {
            "dim": V.dim,
            "cuerpo": V.field.to_dict(),
            "sumandos": [
                {
                    "tipo": t,
                    "dim": U.dim,
                    "multiplicidad": mult,
                    "dim_end": endomorphism_structure(U).dim_end,
                    "modulo": modulo_a_documento(U),
                }
                for t, (U, mult) in enumerate(descomposicion.summands)
            ],
            "cambio_base": matriz_a_documento(V.field, descomposicion.basis_change),
        }

    def tabla(self, documento):
        return "\n".join([
            f"Módulo de dim {documento['dim']} sobre GF({documento['cuerpo']['p']}^{documento['cuerpo']['n']})",
            renderizar_tabla(documento["sumandos"], ["tipo", "dim", "multiplicidad", "dim_end"]),
        ])
