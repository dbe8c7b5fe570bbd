# app_representaciones/tests_comandos.py
"""
Tests de la CLI (management commands).

Cubre:
- management/base.py :: ComandoModular  (formatos, --salida, códigos de salida)
- services/cache_resultados.py        (acierto, caché desactivada, entrada corrupta)
- cli.py :: run()                      (códigos de salida vía execute_from_command_line)
- Comandos: simples, count, fiber, verify, decompose, vertex, source, green,
  extend, restrict, descend

Correr con:
    python manage.py test app_representaciones.tests_comandos --verbosity=2
"""
import io
import json
import tempfile
from contextlib import redirect_stderr, redirect_stdout
from pathlib import Path
from unittest import mock

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from app_representaciones.cli import run
from app_representaciones.domain.errores import ErrorConsistencia
from app_representaciones.domain.resultados import ClassificationReport
from app_representaciones.services.cache_resultados import CacheResultados
from app_representaciones.services.catalogo import grupo_por_nombre
from app_representaciones.services.cuerpos import make_field
from app_representaciones.services.modulos import regular_module, trivial_module
from app_representaciones.services.serializacion import a_json, modulo_a_documento


# ─────────────────────────────────────────────
# Helpers
# ─────────────────────────────────────────────

def correr(*argv):
    """call_command con stdout/stderr capturados. Retorna (código, salida)."""
    salida, errores = io.StringIO(), io.StringIO()
    try:
        call_command(*argv, stdout=salida, stderr=errores)
    except CommandError as e:
        return e.returncode, salida.getvalue()
    return 0, salida.getvalue()


def correr_estructurado(*argv):
    codigo, salida = correr(*argv, "--format", "structured")
    return codigo, json.loads(salida)


def correr_cli(*argv):
    """Como desde la terminal: pasa por run() y parser.exit."""
    salida, errores = io.StringIO(), io.StringIO()
    with redirect_stdout(salida), redirect_stderr(errores):
        codigo = run(list(argv))
    return codigo, salida.getvalue()


def crear_archivo_modulo(directorio, nombre, V):
    ruta = Path(directorio) / nombre
    ruta.write_text(a_json(modulo_a_documento(V)), encoding="utf-8")
    return str(ruta)


class ConDirectorioTemporal(SimpleTestCase):

    def setUp(self):
        self._tmp = tempfile.TemporaryDirectory()
        self.dir = Path(self._tmp.name)

    def tearDown(self):
        self._tmp.cleanup()


# ─────────────────────────────────────────────────────────────────────────────
# 1. Comandos sobre grupo y primo
# ─────────────────────────────────────────────────────────────────────────────

class TestComandosDeGrupo(SimpleTestCase):
    """simples, count, fiber y verify."""

    def test_count_c7_en_tabla(self):
        codigo, salida = correr("count", "-g", "C7", "-p", "2")
        self.assertEqual(codigo, 0)
        self.assertIn("total: 7", salida)
        self.assertIn("oraculo: 7", salida)
        self.assertIn("coinciden: sí", salida)

    def test_count_s3_en_5_estructurado(self):
        codigo, documento = correr_estructurado("count", "-g", "S3", "-p", "5")
        self.assertEqual(codigo, 0)
        self.assertEqual(documento["schema_version"], 1)
        self.assertEqual(documento["comando"], "count")
        self.assertEqual((documento["total"], documento["oracle"]), (3, 3))
        self.assertTrue(documento["agree"])

    def test_simples(self):
        codigo, documento = correr_estructurado("simples", "-g", "C7", "-p", "2")
        self.assertEqual(codigo, 0)
        self.assertEqual([s["dim"] for s in documento["simples"]], [1, 3, 3])

    def test_simples_en_tabla(self):
        codigo, salida = correr("simples", "-g", "S3", "-p", "2")
        self.assertEqual(codigo, 0)
        self.assertIn("ITS(S3) sobre GF(2)", salida)
        self.assertIn("total: 2", salida)

    def test_fiber(self):
        codigo, documento = correr_estructurado("fiber", "-g", "C3", "-p", "2", "-w", "1", "-b", "2")
        self.assertEqual(codigo, 0)
        self.assertEqual([(e["n"], e["dim"]) for e in documento["entradas"]], [(1, 2), (2, 1), (2, 1)])

    def test_fiber_con_indice_fuera_de_rango(self):
        codigo, _ = correr("fiber", "-g", "C3", "-p", "2", "-w", "5", "-b", "2")
        self.assertEqual(codigo, 1)

    def test_verify(self):
        codigo, documento = correr_estructurado("verify", "-g", "C3", "-p", "2", "-b", "2")
        self.assertEqual(codigo, 0)
        self.assertTrue(documento["all_passed"])
        self.assertEqual(len(documento["clausulas"]), 10)

    def test_salida_a_archivo(self):
        with tempfile.TemporaryDirectory() as tmp:
            destino = Path(tmp) / "count.json"
            codigo, salida = correr("count", "-g", "C3", "-p", "2", "--format", "structured",
                                    "--salida", str(destino))
            self.assertEqual(codigo, 0)
            self.assertEqual(salida, "")
            self.assertEqual(json.loads(destino.read_text(encoding="utf-8"))["total"], 3)


# ─────────────────────────────────────────────────────────────────────────────
# 2. Códigos de salida
# ─────────────────────────────────────────────────────────────────────────────

class TestCodigosDeSalida(SimpleTestCase):
    """0 éxito, 1 uso / entrada / topes, 2 consistencia."""

    def test_falta_p(self):
        codigo, _ = correr("count", "-g", "C7")
        self.assertEqual(codigo, 1)

    def test_p_no_primo(self):
        codigo, _ = correr("count", "-g", "C7", "-p", "4")
        self.assertEqual(codigo, 1)

    def test_grupo_inexistente(self):
        codigo, _ = correr("count", "-g", "no_existe.json", "-p", "2")
        self.assertEqual(codigo, 1)

    def test_tope_de_orden(self):
        codigo, _ = correr("count", "-g", "S4", "-p", "2", "--max-group-order", "10")
        self.assertEqual(codigo, 1)

    def test_tope_de_cuerpo(self):
        codigo, _ = correr("fiber", "-g", "C3", "-p", "2", "-w", "1", "-b", "4", "--max-field-size", "8")
        self.assertEqual(codigo, 1)

    def test_falla_de_consistencia(self):
        with mock.patch(
            "app_representaciones.use_cases.contar_absolutamente_simples.ejecutar",
            side_effect=ErrorConsistencia("forzada"),
        ):
            codigo, _ = correr("count", "-g", "C3", "-p", "2")
        self.assertEqual(codigo, 2)

    def test_reporte_en_desacuerdo(self):
        """El documento se emite igual; el código es 2."""
        reporte = ClassificationReport(group="C3", p=2, rows=[], total=3, oracle=4)
        with mock.patch(
            "app_representaciones.use_cases.contar_absolutamente_simples.ejecutar",
            return_value=reporte,
        ):
            codigo, salida = correr("count", "-g", "C3", "-p", "2")
        self.assertEqual(codigo, 2)
        self.assertIn("coinciden: no", salida)

    def test_run_exito(self):
        codigo, salida = correr_cli("count", "-g", "C3", "-p", "2")
        self.assertEqual(codigo, 0)
        self.assertIn("total: 3", salida)

    def test_run_error_de_uso_sale_con_1(self):
        """argparse sale con 2 por defecto; acá queda en 1."""
        codigo, _ = correr_cli("count", "-g", "C3")
        self.assertEqual(codigo, 1)

    def test_run_bandera_desconocida(self):
        codigo, _ = correr_cli("count", "-g", "C3", "-p", "2", "--no-existe")
        self.assertEqual(codigo, 1)

    def test_run_falla_de_consistencia(self):
        with mock.patch(
            "app_representaciones.use_cases.contar_absolutamente_simples.ejecutar",
            side_effect=ErrorConsistencia("forzada"),
        ):
            codigo, _ = correr_cli("count", "-g", "C3", "-p", "2")
        self.assertEqual(codigo, 2)


# ─────────────────────────────────────────────────────────────────────────────
# 3. Caché de resultados
# ─────────────────────────────────────────────────────────────────────────────

class TestCache(ConDirectorioTemporal):
    """La salida no depende de si viene de la caché."""

    LOGGER = "app_representaciones.services.cache_resultados"

    def argumentos(self, formato="structured"):
        return ["simples", "-g", "C7", "-p", "2", "--format", formato, "--cache-dir", str(self.dir)]

    def test_acierto_devuelve_lo_mismo(self):
        _, primera = correr(*self.argumentos())
        with self.assertLogs(self.LOGGER, "INFO") as logs:
            _, segunda = correr(*self.argumentos())
        self.assertEqual(primera, segunda)
        self.assertTrue(any("servido desde la caché" in linea for linea in logs.output))

    def test_tabla_desde_la_cache(self):
        _, primera = correr(*self.argumentos("table"))
        _, segunda = correr(*self.argumentos("table"))
        self.assertEqual(primera, segunda)

    def test_sin_cache_da_lo_mismo(self):
        _, con_cache = correr(*self.argumentos())
        _, sin_cache = correr("simples", "-g", "C7", "-p", "2", "--format", "structured")
        self.assertEqual(con_cache, sin_cache)

    def test_formato_no_cambia_la_clave(self):
        """Una corrida en tabla deja lista la estructurada."""
        correr(*self.argumentos("table"))
        with self.assertLogs(self.LOGGER, "INFO") as logs:
            correr(*self.argumentos())
        self.assertTrue(any("servido desde la caché" in linea for linea in logs.output))

    def test_entrada_corrupta_se_recalcula(self):
        _, primera = correr(*self.argumentos())
        archivos = list(self.dir.glob("*.djcache"))
        self.assertTrue(archivos)
        for archivo in archivos:
            archivo.write_bytes(b"basura")
        with self.assertLogs(self.LOGGER, "WARNING") as logs:
            _, segunda = correr(*self.argumentos())
        self.assertEqual(primera, segunda)
        self.assertTrue(any("ilegible" in linea for linea in logs.output))

    def test_verificar_recalcula_en_cada_corrida(self):
        _, primera = correr(*self.argumentos())
        # mismo valor: ni acierto ni aviso
        with self.assertNoLogs(self.LOGGER, "INFO"):
            _, segunda = correr(*self.argumentos(), "--verificar-cache")
        self.assertEqual(primera, segunda)

    def test_verificar_reescribe_un_valor_distinto(self):
        """Un sobre con digest válido pero valor viejo se reemplaza por el recalculado."""
        CacheResultados(self.dir).obtener_o_calcular("simples", {"grupo": "C7"}, lambda: {"viejo": 1})
        with self.assertLogs(self.LOGGER, "WARNING") as logs:
            documento = CacheResultados(self.dir, verificar=True).obtener_o_calcular(
                "simples", {"grupo": "C7"}, lambda: {"nuevo": 2}
            )
        self.assertEqual(documento, {"nuevo": 2})
        self.assertTrue(any("no coincide" in linea for linea in logs.output))
        releido = CacheResultados(self.dir).obtener_o_calcular("simples", {"grupo": "C7"}, lambda: {"otro": 3})
        self.assertEqual(releido, {"nuevo": 2})

    def test_semilla_distinta_es_otra_entrada(self):
        correr(*self.argumentos())
        antes = len(list(self.dir.glob("*.djcache")))
        correr(*self.argumentos(), "--seed", "7")
        self.assertEqual(len(list(self.dir.glob("*.djcache"))), antes + 1)


# ─────────────────────────────────────────────────────────────────────────────
# 4. Comandos sobre archivos de módulo
# ─────────────────────────────────────────────────────────────────────────────

class TestComandosDeModulo(ConDirectorioTemporal):
    """decompose, vertex, source, green, extend, restrict y descend."""

    def test_extend_y_restrict_encadenados(self):
        T = trivial_module(grupo_por_nombre("C3"), make_field(2, 1))
        ruta = crear_archivo_modulo(self.dir, "trivial.json", T)
        extendido = str(self.dir / "extendido.json")

        codigo, _ = correr("extend", ruta, "-n", "2", "--format", "structured", "--salida", extendido)
        self.assertEqual(codigo, 0)
        codigo, documento = correr_estructurado("restrict", extendido, "-n", "1")
        self.assertEqual(codigo, 0)
        self.assertEqual(documento["dim"], 2)
        self.assertEqual(documento["modulo"]["field"]["n"], 1)

    def test_extend_a_un_grado_que_no_es_multiplo(self):
        V = trivial_module(grupo_por_nombre("C3"), make_field(2, 2))
        ruta = crear_archivo_modulo(self.dir, "v.json", V)
        codigo, _ = correr("extend", ruta, "-n", "3")
        self.assertEqual(codigo, 1)

    def test_decompose_del_regular(self):
        V = regular_module(grupo_por_nombre("S3"), make_field(2, 1))
        ruta = crear_archivo_modulo(self.dir, "regular.json", V)
        codigo, documento = correr_estructurado("decompose", ruta)
        self.assertEqual(codigo, 0)
        self.assertEqual(sorted((s["dim"], s["multiplicidad"]) for s in documento["sumandos"]), [(2, 1), (2, 2)])

    def test_vertex_del_trivial(self):
        T = trivial_module(grupo_por_nombre("S3"), make_field(2, 1))
        ruta = crear_archivo_modulo(self.dir, "trivial.json", T)
        codigo, documento = correr_estructurado("vertex", ruta)
        self.assertEqual(codigo, 0)
        self.assertEqual(documento["vertice"]["order"], 2)

    def test_vertex_de_un_descomponible(self):
        V = regular_module(grupo_por_nombre("S3"), make_field(2, 1))
        ruta = crear_archivo_modulo(self.dir, "regular.json", V)
        codigo, _ = correr("vertex", ruta)
        self.assertEqual(codigo, 1)

    def test_source_del_trivial(self):
        T = trivial_module(grupo_por_nombre("S3"), make_field(3, 1))
        ruta = crear_archivo_modulo(self.dir, "trivial.json", T)
        codigo, documento = correr_estructurado("source", ruta)
        self.assertEqual(codigo, 0)
        self.assertEqual(documento["modulo"]["dim"], 1)

    def test_green_por_defecto_al_normalizador(self):
        T = trivial_module(grupo_por_nombre("S3"), make_field(2, 1))
        ruta = crear_archivo_modulo(self.dir, "trivial.json", T)
        codigo, salida = correr("green", ruta)
        self.assertEqual(codigo, 0)
        self.assertIn("dim 1", salida)

    def test_descend(self):
        codigo, documento = correr_estructurado("descend", "-g", "C3", "-p", "2", "-w", "1", "-n", "2")
        self.assertEqual(codigo, 0)
        self.assertEqual(documento["modulo"]["field"]["n"], 2)

    def test_archivo_inexistente(self):
        codigo, _ = correr("decompose", str(self.dir / "no_esta.json"))
        self.assertEqual(codigo, 1)

    def test_archivo_que_no_es_json(self):
        ruta = self.dir / "roto.json"
        ruta.write_text("{no es json", encoding="utf-8")
        codigo, _ = correr("decompose", str(ruta))
        self.assertEqual(codigo, 1)
