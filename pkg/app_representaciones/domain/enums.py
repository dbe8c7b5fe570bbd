# app_representaciones/domain/enums.py

from enum import Enum

# Versión del documento estructurado que emiten los comandos.
# Subirla cuando cambie la forma de cualquier documento (diffs de aceptación).
VERSION_ESQUEMA = 1


class OperacionCuerpo(Enum):
    SUMA     = "add"
    PRODUCTO = "mul"
    INVERSO  = "inv"
    POTENCIA = "pow"

    @property
    def label(self):
        mapping = {
            self.SUMA:     "Suma",
            self.PRODUCTO: "Producto",
            self.INVERSO:  "Inverso",
            self.POTENCIA: "Potencia",
        }
        return mapping[self]


class FormatoSalida(Enum):
    TABLA       = "table"
    ESTRUCTURADO = "structured"


class Clausula(Enum):
    """Propiedades que corre el verificador por lotes."""
    EQUIVALENCIA_EXTENSION_RESTRICCION = "equivalencia_extension_restriccion"
    HOMOGENEIDAD_RESTRICCION           = "homogeneidad_restriccion"
    ORBITA_GALOIS_UNICA                = "orbita_galois_unica"
    TRANSITIVIDAD_FIBRA                = "transitividad_fibra"
    INVARIANTES_GREEN                  = "invariantes_green"
    CORRESPONDENCIA_GREEN              = "correspondencia_green"
    SIMPLICIDAD_PRESERVADA             = "simplicidad_preservada"
    PARTICION_INDESCOMPONIBLES         = "particion_indescomponibles"
    PARTICION_SIMPLES                  = "particion_simples"
    CONTEO_SIMPLES_ABSOLUTOS           = "conteo_simples_absolutos"

    @property
    def label(self):
        mapping = {
            self.EQUIVALENCIA_EXTENSION_RESTRICCION: "U | V⊗L  ⇔  V | Res(U)",
            self.HOMOGENEIDAD_RESTRICCION:           "Res_F^K(V) ≅ s·W",
            self.ORBITA_GALOIS_UNICA:                "Una sola órbita de Galois por cuerpo",
            self.TRANSITIVIDAD_FIBRA:                "Transitividad de ↑ dentro de la fibra",
            self.INVARIANTES_GREEN:                  "Vértice, fuente y correspondiente preservados",
            self.CORRESPONDENCIA_GREEN:              "Gr biyectiva entre fibras",
            self.SIMPLICIDAD_PRESERVADA:             "V simple ⇔ W simple",
            self.PARTICION_INDESCOMPONIBLES:         "Fibras Γ⁻¹ disjuntas y exhaustivas",
            self.PARTICION_SIMPLES:                  "Fibras Σ⁻¹ disjuntas y exhaustivas",
            self.CONTEO_SIMPLES_ABSOLUTOS:           "Conteo de simples absolutos = oráculo",
        }
        return mapping[self]
