# app_representaciones/tests_serializacion.py
"""
Tests de documentos, configuración de corrida y reparto en hilos.

Cubre:
- services/serializacion.py :: cuerpo/grupo/módulo desde documento, digest()
- services/catalogo.py      :: cargar_grupo() desde archivo
- domain/config.py          :: RunConfig (validación de banderas)
- services/paralelo.py      :: mapear()                (orden y límites en hilos)

Correr con:
    python manage.py test app_representaciones.tests_serializacion --verbosity=2
"""
import json
import tempfile
from pathlib import Path

from django.test import SimpleTestCase

from app_representaciones.domain.config import RunConfig
from app_representaciones.domain.errores import ErrorEntrada
from app_representaciones.factories import ModuloFactory
from app_representaciones.services.catalogo import cargar_grupo, grupo_por_nombre
from app_representaciones.services.cuerpos import make_field
from app_representaciones.services.limites import aplicar_limites, limites_vigentes
from app_representaciones.services.meataxe import is_isomorphic
from app_representaciones.services.paralelo import mapear
from app_representaciones.services.serializacion import (
    cuerpo_desde_documento,
    digest,
    grupo_a_documento,
    grupo_desde_documento,
    leer_modulo,
    modulo_a_documento,
    modulo_desde_documento,
)


# ─────────────────────────────────────────────
# Helpers
# ─────────────────────────────────────────────

def crear_omega_c3():
    return ModuloFactory.escalar(grupo_por_nombre("C3"), make_field(2, 2), [2])


class ConArchivos(SimpleTestCase):

    def setUp(self):
        self._tmp = tempfile.TemporaryDirectory()
        self.dir = Path(self._tmp.name)

    def tearDown(self):
        self._tmp.cleanup()

    def escribir(self, nombre, documento):
        ruta = self.dir / nombre
        ruta.write_text(json.dumps(documento), encoding="utf-8")
        return ruta


# ─────────────────────────────────────────────────────────────────────────────
# 1. Cuerpos y grupos
# ─────────────────────────────────────────────────────────────────────────────

class TestDocumentosDeCuerpoYGrupo(ConArchivos):

    def test_cuerpo_canonico(self):
        K = cuerpo_desde_documento({"p": 2, "n": 3, "min_poly": [1, 1, 0, 1]})
        self.assertIs(K, make_field(2, 3))

    def test_polinomio_no_canonico(self):
        """x³ + x² + 1 también es irreducible, pero no es el que usa la librería."""
        with self.assertRaises(ErrorEntrada):
            cuerpo_desde_documento({"p": 2, "n": 3, "min_poly": [1, 0, 1, 1]})

    def test_cuerpo_mal_formado(self):
        with self.assertRaises(ErrorEntrada):
            cuerpo_desde_documento({"p": 2})

    def test_grupo_del_catalogo(self):
        self.assertEqual(grupo_a_documento(grupo_por_nombre("S3")), {"catalogo": "S3"})
        self.assertIs(grupo_desde_documento({"catalogo": "s3"}), grupo_por_nombre("S3"))

    def test_grupo_desconocido(self):
        with self.assertRaises(ErrorEntrada):
            grupo_desde_documento({"catalogo": "M24"})

    def test_grupo_desde_archivo(self):
        ruta = self.escribir("s3.json", {"degree": 3, "generators": [[2, 1, 3], [2, 3, 1]]})
        G = cargar_grupo(str(ruta))
        self.assertEqual(G.order, 6)

    def test_grupo_sin_generadores(self):
        with self.assertRaises(ErrorEntrada):
            grupo_desde_documento({"degree": 3})

    def test_archivo_inexistente(self):
        with self.assertRaises(ErrorEntrada):
            cargar_grupo(str(self.dir / "no_existe.json"))


# ─────────────────────────────────────────────────────────────────────────────
# 2. Módulos
# ─────────────────────────────────────────────────────────────────────────────

class TestDocumentosDeModulo(ConArchivos):

    def test_ida_y_vuelta(self):
        V = crear_omega_c3()
        W = modulo_desde_documento(json.loads(json.dumps(modulo_a_documento(V))))
        self.assertIs(W.field, V.field)
        self.assertTrue(is_isomorphic(V, W).isomorfos)

    def test_coeficiente_fuera_de_rango(self):
        doc = modulo_a_documento(ModuloFactory.signo(grupo_por_nombre("S3"), make_field(3, 1)))
        doc["matrices"][0] = [[[3]]]
        with self.assertRaises(ErrorEntrada):
            modulo_desde_documento(doc)

    def test_forma_equivocada(self):
        doc = modulo_a_documento(crear_omega_c3())
        doc["dim"] = 2
        with self.assertRaises(ErrorEntrada):
            modulo_desde_documento(doc)

    def test_falta_una_clave(self):
        doc = modulo_a_documento(crear_omega_c3())
        del doc["field"]
        with self.assertRaises(ErrorEntrada):
            modulo_desde_documento(doc)

    def test_salida_de_un_comando(self):
        """leer_modulo acepta el documento envuelto en "modulo"."""
        V = crear_omega_c3()
        ruta = self.escribir("salida.json", {"schema_version": 1, "modulo": modulo_a_documento(V)})
        self.assertTrue(is_isomorphic(leer_modulo(ruta), V).isomorfos)

    def test_json_invalido(self):
        ruta = self.dir / "roto.json"
        ruta.write_text("{no es json", encoding="utf-8")
        with self.assertRaises(ErrorEntrada):
            leer_modulo(ruta)


# ─────────────────────────────────────────────────────────────────────────────
# 3. Digest
# ─────────────────────────────────────────────────────────────────────────────

class TestDigest(SimpleTestCase):

    def test_no_depende_del_orden_de_claves(self):
        self.assertEqual(digest({"a": 1, "b": [1, 2]}), digest({"b": [1, 2], "a": 1}))

    def test_distingue_contenidos(self):
        self.assertNotEqual(digest({"a": 1}), digest({"a": 2}))


# ─────────────────────────────────────────────────────────────────────────────
# 4. RunConfig
# ─────────────────────────────────────────────────────────────────────────────

class TestRunConfig(SimpleTestCase):

    def test_valores_por_defecto(self):
        config = RunConfig(grupo="S3", p=2)
        self.assertEqual(config.to_dict()["formato"], "table")
        self.assertEqual(config.cota_grado, 6)

    def test_p_no_primo(self):
        with self.assertRaises(ErrorEntrada):
            RunConfig(grupo="S3", p=4)

    def test_cota_invalida(self):
        with self.assertRaises(ErrorEntrada):
            RunConfig(grupo="S3", cota_grado=0)

    def test_semilla_fuera_de_rango(self):
        with self.assertRaises(ErrorEntrada):
            RunConfig(grupo="S3", semilla=-1)
        with self.assertRaises(ErrorEntrada):
            RunConfig(grupo="S3", semilla=2 ** 64)


# ─────────────────────────────────────────────────────────────────────────────
# 5. mapear()
# ─────────────────────────────────────────────────────────────────────────────

class TestMapear(SimpleTestCase):

    def test_conserva_el_orden(self):
        self.assertEqual(mapear(lambda x: x * x, range(10), max_trabajadores=4), [x * x for x in range(10)])

    def test_un_solo_trabajador(self):
        self.assertEqual(mapear(str, [1, 2], max_trabajadores=1), ["1", "2"])

    def test_los_hilos_ven_los_limites(self):
        with aplicar_limites(max_orden_grupo=5):
            topes = mapear(lambda _: limites_vigentes().max_orden_grupo, range(4), max_trabajadores=3)
        self.assertEqual(topes, [5, 5, 5, 5])
