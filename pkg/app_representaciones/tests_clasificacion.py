# app_representaciones/tests_clasificacion.py
"""
Tests de la clasificación de módulos absolutamente indescomponibles.

Cubre:
- services/clasificacion.py :: up_relation()
- services/clasificacion.py :: fiber() / fibra_en_grado()
- services/clasificacion.py :: descend_component() / minimal_field()
- services/clasificacion.py :: gamma_of() / sigma_of() / gamma_fiber() / sigma_fiber()
- services/clasificacion.py :: same_absolute_type() / splitting_degree()
- use_cases/contar_absolutamente_simples.py :: ejecutar()
- use_cases/verificar_clasificacion.py :: ejecutar()

Correr con:
    python manage.py test app_representaciones.tests_clasificacion --verbosity=2
"""
from unittest import mock

from django.test import SimpleTestCase

from app_representaciones.domain.enums import Clausula
from app_representaciones.domain.errores import (
    ErrorEntrada,
    ErrorIndice,
    ErrorModuloDescomponible,
    ErrorModuloNoSimple,
)
from app_representaciones.factories import ModuloFactory
from app_representaciones.services.catalogo import grupo_por_nombre
from app_representaciones.services.clasificacion import (
    clasificar,
    descend_component,
    fiber,
    gamma_fiber,
    gamma_of,
    minimal_field,
    same_absolute_type,
    sigma_fiber,
    sigma_of,
    splitting_degree,
    up_relation,
)
from app_representaciones.services.cuerpos import make_field
from app_representaciones.services.meataxe import decompose, is_isomorphic, simple_modules
from app_representaciones.services.modulos import extend_scalars, regular_module, trivial_module
from app_representaciones.use_cases import contar_absolutamente_simples, verificar_clasificacion


# ─────────────────────────────────────────────
# Helpers
# ─────────────────────────────────────────────

def crear_cuadratico_c3():
    return ModuloFactory.companera(grupo_por_nombre("C3"), make_field(2, 1), [1, 1])


def crear_omega_c3():
    return ModuloFactory.escalar(grupo_por_nombre("C3"), make_field(2, 2), [2])


def crear_cubico_c7():
    return ModuloFactory.companera(grupo_por_nombre("C7"), make_field(2, 1), [1, 1, 0])


def crear_regular_c2():
    return regular_module(grupo_por_nombre("C2"), make_field(2, 1))


# ─────────────────────────────────────────────────────────────────────────────
# 1. up_relation()
# ─────────────────────────────────────────────────────────────────────────────

class TestUpRelation(SimpleTestCase):
    """(K, V) ↑ (L, U) si U | V ⊗ L."""

    def test_reflexiva(self):
        W = crear_cubico_c7()
        self.assertTrue(up_relation(W, W))

    def test_sube_a_omega(self):
        self.assertTrue(up_relation(crear_cuadratico_c3(), crear_omega_c3()))

    def test_no_baja(self):
        """GF(4) no está contenido en GF(2)."""
        self.assertFalse(up_relation(crear_omega_c3(), crear_cuadratico_c3()))

    def test_no_relacionados(self):
        """El trivial no sube a ω."""
        T = trivial_module(grupo_por_nombre("C3"), make_field(2, 1))
        self.assertFalse(up_relation(T, crear_omega_c3()))

    def test_acepta_pares_clasificados(self):
        self.assertTrue(up_relation(clasificar(crear_cuadratico_c3()), clasificar(crear_omega_c3())))

    def test_exige_indescomponibles(self):
        G = grupo_por_nombre("C3")
        V = regular_module(G, make_field(2, 1))
        with self.assertRaises(ErrorModuloDescomponible):
            up_relation(V, crear_omega_c3())


# ─────────────────────────────────────────────────────────────────────────────
# 2. fiber()
# ─────────────────────────────────────────────────────────────────────────────

class TestFibra(SimpleTestCase):
    """ℰ(W) hasta una cota de grado."""

    def test_trivial_una_entrada_por_grado(self):
        T = trivial_module(grupo_por_nombre("S3"), make_field(2, 1))
        entradas = fiber(T, 3)
        self.assertEqual([e.entry.field.n for e in entradas], [1, 2, 3])
        self.assertTrue(all(e.multiplicity == 1 and e.entry.module.dim == 1 for e in entradas))

    def test_cuadratico_se_parte_en_grado_par(self):
        entradas = fiber(crear_cuadratico_c3(), 2)
        por_grado = {}
        for e in entradas:
            por_grado.setdefault(e.entry.field.n, []).append(e)
        self.assertEqual([e.entry.module.dim for e in por_grado[1]], [2])
        self.assertEqual([e.entry.module.dim for e in por_grado[2]], [1, 1])
        self.assertEqual({e.galois_orbit_index for e in por_grado[2]}, {0})

    def test_cubico_sobre_gf4_y_gf8(self):
        """x³ + x + 1 sigue irreducible sobre GF(4) y se parte en GF(8)."""
        entradas = fiber(crear_cubico_c7(), 3)
        dims = {n: [e.entry.module.dim for e in entradas if e.entry.field.n == n] for n in (1, 2, 3)}
        self.assertEqual(dims, {1: [3], 2: [3], 3: [1, 1, 1]})

    def test_multiplicidad_en_caracteristica_que_divide(self):
        """El regular de C2 en 2 queda indescomponible en todo grado."""
        entradas = fiber(crear_regular_c2(), 2)
        self.assertEqual([(e.entry.module.dim, e.multiplicity) for e in entradas], [(2, 1), (2, 1)])
        self.assertTrue(all(e.entry.absolutely_indecomposable for e in entradas))

    def test_exige_cuerpo_primo(self):
        with self.assertRaises(ErrorEntrada):
            fiber(crear_omega_c3(), 2)

    def test_to_dict(self):
        entrada = fiber(crear_cuadratico_c3(), 1)[0]
        self.assertEqual(
            entrada.to_dict(),
            {
                "cuerpo": {"p": 2, "n": 1},
                "dim": 2,
                "absolutamente_simple": False,
                "absolutamente_indescomponible": False,
                "orbita": 0,
                "multiplicidad": 1,
            },
        )


# ─────────────────────────────────────────────────────────────────────────────
# 3. Descenso y cuerpo mínimo
# ─────────────────────────────────────────────────────────────────────────────

class TestDescenso(SimpleTestCase):

    def test_trivial_desciende_al_primo(self):
        T = trivial_module(grupo_por_nombre("S3"), make_field(2, 1))
        self.assertEqual(descend_component(T, 2, 0).field.n, 1)

    def test_omega_no_desciende(self):
        self.assertEqual(descend_component(crear_cuadratico_c3(), 2, 0).field.n, 2)

    def test_cubico_desde_gf64(self):
        """Los sumandos de W ⊗ GF(64) están definidos sobre GF(8)."""
        Y = descend_component(crear_cubico_c7(), 6, 0)
        self.assertEqual((Y.field.n, Y.module.dim), (3, 1))

    def test_extension_del_descenso_reproduce_el_componente(self):
        W = crear_cuadratico_c3()
        L = make_field(2, 4)
        X = decompose(extend_scalars(W, L)).tipos()[1]
        Y = descend_component(W, 4, 1)
        self.assertTrue(is_isomorphic(extend_scalars(Y.module, L), X).isomorfos)

    def test_indice_fuera_de_rango(self):
        with self.assertRaises(ErrorIndice):
            descend_component(crear_cuadratico_c3(), 2, 2)

    def test_cuerpo_minimo(self):
        """ω extendido a GF(16) vuelve a GF(4)."""
        Y = clasificar(extend_scalars(crear_omega_c3(), make_field(2, 4)))
        self.assertEqual(minimal_field(Y).field.n, 2)


# ─────────────────────────────────────────────────────────────────────────────
# 4. Γ y Σ
# ─────────────────────────────────────────────────────────────────────────────

class TestGammaSigma(SimpleTestCase):

    def test_gamma_del_primo_es_el_mismo(self):
        T = trivial_module(grupo_por_nombre("S3"), make_field(2, 1))
        self.assertTrue(is_isomorphic(gamma_of(clasificar(T)), T).isomorfos)

    def test_gamma_de_omega(self):
        self.assertTrue(is_isomorphic(gamma_of(clasificar(crear_omega_c3())), crear_cuadratico_c3()).isomorfos)

    def test_sigma_de_un_absolutamente_simple(self):
        G, F = grupo_por_nombre("S3"), make_field(2, 1)
        natural = simple_modules(G, F).modules[1]
        self.assertTrue(is_isomorphic(sigma_of(clasificar(natural)), natural).isomorfos)

    def test_sigma_exige_absolutamente_simple(self):
        with self.assertRaises(ErrorEntrada):
            sigma_of(clasificar(crear_regular_c2()))

    def test_tamanos_de_sigma_fiber(self):
        T = trivial_module(grupo_por_nombre("C7"), make_field(2, 1))
        self.assertEqual(len(sigma_fiber(T)), 1)
        self.assertEqual(len(sigma_fiber(crear_cuadratico_c3())), 2)
        self.assertEqual(len(sigma_fiber(crear_cubico_c7())), 3)

    def test_sigma_fiber_vuelve_a_w(self):
        W = crear_cubico_c7()
        for X in sigma_fiber(W):
            self.assertTrue(X.absolutely_simple)
            self.assertTrue(is_isomorphic(sigma_of(X), W).isomorfos)

    def test_sigma_fiber_exige_simple(self):
        with self.assertRaises(ErrorModuloNoSimple):
            sigma_fiber(crear_regular_c2())

    def test_gamma_fiber_del_regular_de_c2(self):
        fibra = gamma_fiber(crear_regular_c2(), 4)
        self.assertEqual([(Y.field.n, Y.module.dim) for Y in fibra], [(1, 2)])

    def test_gamma_fiber_de_un_simple_coincide_con_sigma(self):
        W = crear_cubico_c7()
        self.assertEqual(len(gamma_fiber(W, 6)), len(sigma_fiber(W)))
        self.assertEqual(splitting_degree(W, 6), 3)

    def test_mismo_tipo_absoluto(self):
        """ω es del tipo absoluto de exactamente uno de los dos sumandos de W ⊗ GF(4)."""
        omega = clasificar(crear_omega_c3())
        otra = descend_component(crear_cuadratico_c3(), 2, 0)
        hermana = descend_component(crear_cuadratico_c3(), 2, 1)
        self.assertTrue(same_absolute_type(omega, omega))
        self.assertNotEqual(same_absolute_type(omega, otra), same_absolute_type(omega, hermana))


# ─────────────────────────────────────────────────────────────────────────────
# 5. Use case: contar absolutamente simples
# ─────────────────────────────────────────────────────────────────────────────

class TestContarAbsolutamenteSimples(SimpleTestCase):
    """El total coincide con las clases p-regulares."""

    def test_c7_en_2(self):
        reporte = contar_absolutamente_simples.ejecutar(grupo_por_nombre("C7"), 2)
        self.assertEqual([f.to_dict() for f in reporte.rows], [
            {"dim": 1, "end_degree": 1, "fiber_size": 1, "splitting_degree": 1},
            {"dim": 3, "end_degree": 3, "fiber_size": 3, "splitting_degree": 3},
            {"dim": 3, "end_degree": 3, "fiber_size": 3, "splitting_degree": 3},
        ])
        self.assertEqual((reporte.total, reporte.oracle), (7, 7))
        self.assertTrue(reporte.agree)

    def test_s3_en_5(self):
        reporte = contar_absolutamente_simples.ejecutar(grupo_por_nombre("S3"), 5)
        self.assertEqual(reporte.total, 3)
        self.assertTrue(reporte.agree)

    def test_bateria(self):
        casos = [
            ("C2", 2, 1), ("C3", 2, 3), ("S3", 2, 2), ("S3", 3, 2),
            ("A4", 2, 3), ("A4", 3, 2), ("D8", 2, 1), ("Q8", 2, 1), ("Q8", 3, 5),
        ]
        for nombre, p, esperado in casos:
            with self.subTest(grupo=nombre, p=p):
                reporte = contar_absolutamente_simples.ejecutar(grupo_por_nombre(nombre), p)
                self.assertEqual(reporte.total, esperado)
                self.assertTrue(reporte.agree)

    def test_no_depende_de_la_semilla(self):
        G = grupo_por_nombre("A4")
        filas = [contar_absolutamente_simples.ejecutar(G, 2, seed=s).to_dict() for s in range(3)]
        self.assertEqual(filas[0], filas[1])
        self.assertEqual(filas[0], filas[2])

    def test_grado_de_descomposicion_sale_del_descenso(self):
        """La columna es el grado del cuerpo mínimo de los módulos de la fibra."""
        reales = contar_absolutamente_simples.minimal_field
        with mock.patch.object(contar_absolutamente_simples, "minimal_field", side_effect=reales) as descenso:
            reporte = contar_absolutamente_simples.ejecutar(grupo_por_nombre("C3"), 2)
        self.assertEqual(descenso.call_count, 3)
        self.assertEqual([f.splitting_degree for f in reporte.rows], [1, 2])

    def test_avisa_si_no_coincide(self):
        """Con un oráculo forzado a otro valor el reporte queda en desacuerdo y se loguea."""
        with mock.patch.object(contar_absolutamente_simples, "p_regular_class_count", return_value=99):
            with self.assertLogs("app_representaciones.use_cases.contar_absolutamente_simples", "WARNING"):
                reporte = contar_absolutamente_simples.ejecutar(grupo_por_nombre("C3"), 2)
        self.assertFalse(reporte.agree)


# ─────────────────────────────────────────────────────────────────────────────
# 6. Use case: verificar la clasificación
# ─────────────────────────────────────────────────────────────────────────────

class TestVerificarClasificacion(SimpleTestCase):
    """Todas las cláusulas aprobadas en grupos chicos."""

    def assertTodasAprobadas(self, reporte):
        fallidas = {c.clausula.value: c.fallas for c in reporte.clausulas if not c.aprobada}
        self.assertEqual(fallidas, {})
        self.assertTrue(reporte.all_passed)

    def test_s3_en_2(self):
        reporte = verificar_clasificacion.ejecutar(grupo_por_nombre("S3"), 2, 4)
        self.assertTodasAprobadas(reporte)
        self.assertEqual({c.clausula for c in reporte.clausulas}, set(Clausula))

    def test_s3_en_3(self):
        self.assertTodasAprobadas(verificar_clasificacion.ejecutar(grupo_por_nombre("S3"), 3, 4))

    def test_c3_en_2(self):
        self.assertTodasAprobadas(verificar_clasificacion.ejecutar(grupo_por_nombre("C3"), 2, 4))

    def test_cada_clausula_tiene_instancias(self):
        reporte = verificar_clasificacion.ejecutar(grupo_por_nombre("C3"), 2, 2)
        for c in reporte.clausulas:
            with self.subTest(clausula=c.clausula.value):
                self.assertGreater(c.instancias, 0)

    def test_con_trabajadores(self):
        """El resultado no cambia al repartir las tareas en hilos."""
        G = grupo_por_nombre("C3")
        secuencial = verificar_clasificacion.ejecutar(G, 2, 2).to_dict()
        en_hilos = verificar_clasificacion.ejecutar(G, 2, 2, max_trabajadores=4).to_dict()
        self.assertEqual(secuencial, en_hilos)

    def test_c7_en_2_hasta_grado_6(self):
        """GF(64) es el primer cuerpo donde se parten los dos cúbicos."""
        reporte = verificar_clasificacion.ejecutar(grupo_por_nombre("C7"), 2, 6)
        self.assertTodasAprobadas(reporte)
        self.assertEqual(reporte.degree_bound, 6)

    def test_s3_en_2_hasta_grado_6(self):
        self.assertTodasAprobadas(verificar_clasificacion.ejecutar(grupo_por_nombre("S3"), 2, 6))

    def test_bateria_hasta_grado_2(self):
        casos = [("C2", 2), ("C3", 2), ("A4", 2), ("A4", 3), ("D8", 2), ("Q8", 2), ("Q8", 3)]
        for nombre, p in casos:
            with self.subTest(grupo=nombre, p=p):
                self.assertTodasAprobadas(verificar_clasificacion.ejecutar(grupo_por_nombre(nombre), p, 2))

    def test_green_exige_el_par_vertice_fuente(self):
        """Si Gr(X) no compartiera vértice y fuente con X la cláusula falla."""
        with mock.patch.object(verificar_clasificacion, "comparte_vertice_y_fuente", return_value=False):
            reporte = verificar_clasificacion.ejecutar(grupo_por_nombre("C3"), 2, 2)
        fallidas = {c.clausula for c in reporte.clausulas if not c.aprobada}
        self.assertEqual(fallidas, {Clausula.CORRESPONDENCIA_GREEN})
