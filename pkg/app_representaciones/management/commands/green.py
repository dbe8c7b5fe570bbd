"""
Correspondiente de Green de un módulo indescomponible leído de archivo.

Uso:
    python manage.py green modulo.json
    python manage.py green modulo.json --subgrupo h.json

Sin --subgrupo se usa H = N_G(Q) con Q el vértice de V. El archivo de subgrupo
es {"generators": [...]} con imágenes 1-based sobre el mismo grado que G.
"""

from app_representaciones.domain.errores import ErrorEntrada
from app_representaciones.management.base import ComandoModular
from app_representaciones.services.green import green_correspondent, vertex
from app_representaciones.services.grupos import group_from_generators, normalizer, subgroup_from_elements
from app_representaciones.services.serializacion import (
    digest,
    leer_documento,
    modulo_a_documento,
    subgrupo_a_documento,
)


class Command(ComandoModular):
    help = "Calcula Gr_G^H(V) para H ⊇ N_G(Q), con Q el vértice de V."
    operacion = "green"
    usa_modulo = True

    def agregar_argumentos(self, parser):
        parser.add_argument("--subgrupo", default=None, help="Archivo con los generadores de H (default: N_G(Q))")

    def partes_extra(self, options):
        if not options["subgrupo"]:
            return {}
        return {"subgrupo": digest(leer_documento(options["subgrupo"]))}

    def subgrupo(self, G, ruta):
        documento = leer_documento(ruta)
        try:
            H = group_from_generators(G.degree, documento["generators"])
        except KeyError as e:
            raise ErrorEntrada(f"Subgrupo mal formado: falta {e}") from e
        return subgroup_from_elements(G, G.indices_de(H), nombre="H")

    def calcular(self, config, V, options):
        G = V.group
        Q = vertex(V)
        H = self.subgrupo(G, options["subgrupo"]) if options["subgrupo"] else normalizer(G, Q)
        correspondiente = green_correspondent(V, Q, H)
        return {
            "dim": V.dim,
            "vertice": subgrupo_a_documento(Q),
            "subgrupo": subgrupo_a_documento(H),
            "correspondiente": {"dim": correspondiente.dim},
            "modulo": modulo_a_documento(correspondiente),
        }

    def tabla(self, documento):
        return "\n".join([
            f"vértice: orden {documento['vertice']['order']}",
            f"H: orden {documento['subgrupo']['order']}",
            f"Gr(V): dim {documento['correspondiente']['dim']} (V: dim {documento['dim']})",
        ])
