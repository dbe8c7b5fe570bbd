# app_representaciones/tests_meataxe.py
"""
Tests del MeatAxe.

Cubre:
- services/meataxe.py :: is_simple()                    (certificados y testigos)
- services/meataxe.py :: composition_factors()
- services/meataxe.py :: endomorphism_structure() / is_indecomposable()
- services/meataxe.py :: is_isomorphic() / is_component()
- services/meataxe.py :: decompose()                    (Krull–Schmidt, independencia de la semilla)
- services/meataxe.py :: simple_modules()
- services/meataxe.py :: clave_canonica() / forma_estandar()   (desempate de tipos)

Correr con:
    python manage.py test app_representaciones.tests_meataxe --verbosity=2
"""
import numpy as np
from django.test import SimpleTestCase

from app_representaciones.domain.errores import ErrorEntrada, ErrorModuloDescomponible
from app_representaciones.factories import ModuloFactory
from app_representaciones.services import algebra_lineal as al
from app_representaciones.services.catalogo import grupo_por_nombre
from app_representaciones.services.cuerpos import make_field
from app_representaciones.services.meataxe import (
    clave_canonica,
    composition_factors,
    composition_series,
    decompose,
    end_degree,
    endomorphism_structure,
    forma_estandar,
    is_absolutely_indecomposable,
    is_absolutely_simple,
    is_component,
    is_indecomposable,
    is_isomorphic,
    is_simple,
    simple_modules,
)
from app_representaciones.services.grupos import group_from_generators
from app_representaciones.services.modulos import (
    direct_sum,
    extend_scalars,
    regular_module,
    rep_from_matrices,
    trivial_module,
    zero_module,
)


# ─────────────────────────────────────────────
# Helpers
# ─────────────────────────────────────────────

def crear_regular(nombre, p, n=1):
    return regular_module(grupo_por_nombre(nombre), make_field(p, n))


def crear_cuadratico_c3():
    return ModuloFactory.companera(grupo_por_nombre("C3"), make_field(2, 1), [1, 1])


def crear_cubico_c7(coeficientes=(1, 1, 0)):
    """x³ + x + 1 por defecto; (1, 0, 1) da x³ + x² + 1."""
    return ModuloFactory.companera(grupo_por_nombre("C7"), make_field(2, 1), list(coeficientes))


def crear_modulos_v4():
    """Tres indescomponibles de dim 2 de C2 × C2 sobre GF(2) con la misma clave canónica."""
    G = group_from_generators(4, [[2, 1, 4, 3], [3, 4, 1, 2]], "V4")
    K = make_field(2, 1)
    J = [[1, 0], [1, 1]]
    I = [[1, 0], [0, 1]]
    return [rep_from_matrices(G, K, par) for par in ([J, I], [I, J], [J, J])]


# ─────────────────────────────────────────────────────────────────────────────
# 1. Simplicidad y composición
# ─────────────────────────────────────────────────────────────────────────────

class TestSimplicidad(SimpleTestCase):
    """is_simple con certificado o testigo."""

    def test_trivial_es_simple(self):
        self.assertTrue(is_simple(trivial_module(grupo_por_nombre("S3"), make_field(2, 1))).es_simple)

    def test_companeras_irreducibles(self):
        self.assertTrue(is_simple(crear_cuadratico_c3()).es_simple)
        self.assertTrue(is_simple(crear_cubico_c7()).es_simple)

    def test_regular_no_es_simple(self):
        """El testigo es un subespacio propio e invariante."""
        V = crear_regular("C3", 2)
        resultado = is_simple(V)
        self.assertFalse(resultado.es_simple)
        testigo = resultado.testigo
        self.assertIsNotNone(testigo)
        self.assertTrue(0 < testigo.shape[0] < V.dim)
        for M in V.matrices:
            ampliado = al.apilar(V.GF, [testigo, testigo @ M], V.dim)
            self.assertEqual(al.rango(ampliado), al.rango(testigo))

    def test_modulo_nulo(self):
        with self.assertRaises(ErrorEntrada):
            is_simple(zero_module(grupo_por_nombre("C3"), make_field(2, 1)))

    def test_factores_del_regular_de_c3(self):
        dims = sorted(f.dim for f in composition_factors(crear_regular("C3", 2)))
        self.assertEqual(dims, [1, 2])

    def test_factores_del_regular_de_c7(self):
        dims = sorted(f.dim for f in composition_factors(crear_regular("C7", 2)))
        self.assertEqual(dims, [1, 3, 3])

    def test_factores_del_regular_de_s3_en_2(self):
        """Dos triviales y dos copias del simple de dim 2."""
        dims = sorted(f.dim for f in composition_factors(crear_regular("S3", 2)))
        self.assertEqual(dims, [1, 1, 2, 2])

    def test_serie_en_caracteristica_que_divide(self):
        """GF(3)C3 es uniserial con tres triviales."""
        serie = composition_series(crear_regular("C3", 3))
        self.assertEqual(serie.dims, [1, 1, 1])

    def test_resultado_no_depende_de_la_semilla(self):
        V = crear_regular("S3", 2)
        for seed in range(5):
            with self.subTest(seed=seed):
                self.assertFalse(is_simple(V, seed).es_simple)
                self.assertEqual(sorted(f.dim for f in composition_factors(V, seed)), [1, 1, 2, 2])


# ─────────────────────────────────────────────────────────────────────────────
# 2. End e indescomponibilidad
# ─────────────────────────────────────────────────────────────────────────────

class TestEndomorfismos(SimpleTestCase):
    """dim End, radical y cociente."""

    def test_grado_end_de_simples(self):
        self.assertEqual(end_degree(crear_cuadratico_c3()), 2)
        self.assertEqual(end_degree(crear_cubico_c7()), 3)

    def test_regular_de_c2_es_local(self):
        """GF(2)C2 ≅ GF(2)[x]/(x²): End local con radical de dim 1."""
        estructura = endomorphism_structure(crear_regular("C2", 2))
        self.assertEqual((estructura.dim_end, estructura.dim_radical), (2, 1))
        self.assertTrue(estructura.es_local)

    def test_indescomponibles(self):
        self.assertTrue(is_indecomposable(crear_regular("C2", 2)))
        self.assertTrue(is_absolutely_indecomposable(crear_regular("C2", 2)))
        self.assertTrue(is_indecomposable(crear_cuadratico_c3()))
        self.assertFalse(is_absolutely_indecomposable(crear_cuadratico_c3()))

    def test_suma_no_es_indescomponible(self):
        W = crear_cubico_c7()
        self.assertFalse(is_indecomposable(direct_sum(W, W)))

    def test_absolutamente_simples(self):
        omega = ModuloFactory.escalar(grupo_por_nombre("C3"), make_field(2, 2), [2])
        self.assertTrue(is_absolutely_simple(omega))
        self.assertTrue(is_absolutely_simple(trivial_module(grupo_por_nombre("S3"), make_field(2, 1))))
        self.assertFalse(is_absolutely_simple(crear_cuadratico_c3()))


# ─────────────────────────────────────────────────────────────────────────────
# 3. Isomorfismo y sumandos
# ─────────────────────────────────────────────────────────────────────────────

class TestIsomorfismo(SimpleTestCase):

    def test_reflexivo_con_intertwiner(self):
        W = crear_cubico_c7()
        resultado = is_isomorphic(W, W)
        self.assertTrue(resultado.isomorfos)
        M = resultado.intertwiner
        self.assertTrue(np.array_equal(W.matrices[0] @ M, M @ W.matrices[0]))

    def test_trivial_y_signo(self):
        G, F = grupo_por_nombre("S3"), make_field(3, 1)
        self.assertFalse(is_isomorphic(trivial_module(G, F), ModuloFactory.signo(G, F)).isomorfos)

    def test_cubicos_distintos(self):
        """x³ + x + 1 y x³ + x² + 1 dan simples no isomorfos."""
        self.assertFalse(is_isomorphic(crear_cubico_c7(), crear_cubico_c7((1, 0, 1))).isomorfos)

    def test_dimensiones_distintas(self):
        G, F = grupo_por_nombre("C3"), make_field(2, 1)
        self.assertFalse(is_isomorphic(trivial_module(G, F), crear_cuadratico_c3()).isomorfos)

    def test_componente(self):
        V = crear_regular("C2", 2)
        T = trivial_module(V.group, V.field)
        self.assertFalse(is_component(T, V))
        self.assertTrue(is_component(V, direct_sum(V, T)))
        self.assertTrue(is_component(T, direct_sum(V, T)))

    def test_componente_exige_indescomponible(self):
        W = crear_cubico_c7()
        with self.assertRaises(ErrorModuloDescomponible):
            is_component(direct_sum(W, W), W)


# ─────────────────────────────────────────────────────────────────────────────
# 4. decompose()
# ─────────────────────────────────────────────────────────────────────────────

class TestDecompose(SimpleTestCase):
    """Krull–Schmidt con tipos en orden canónico."""

    def tipos(self, descomposicion):
        return [(U.dim, m) for U, m in descomposicion.summands]

    def test_simple_queda_entero(self):
        self.assertEqual(self.tipos(decompose(crear_cubico_c7())), [(3, 1)])

    def test_cuadratico_sobre_gf4(self):
        """W ⊗ GF(4) = ω ⊕ ω²."""
        V = extend_scalars(crear_cuadratico_c3(), make_field(2, 2))
        self.assertEqual(self.tipos(decompose(V)), [(1, 1), (1, 1)])

    def test_cubico_sobre_gf8(self):
        V = extend_scalars(crear_cubico_c7(), make_field(2, 3))
        self.assertEqual(self.tipos(decompose(V)), [(1, 1), (1, 1), (1, 1)])

    def test_regular_de_s3_en_2(self):
        """P(trivial) de dim 2 y el simple de dim 2 proyectivo, dos veces."""
        descomposicion = decompose(crear_regular("S3", 2))
        self.assertEqual(sorted(self.tipos(descomposicion)), [(2, 1), (2, 2)])
        self.assertEqual(descomposicion.total_componentes(), 3)

    def test_cambio_de_base_es_invertible(self):
        V = crear_regular("S3", 2)
        C = decompose(V).basis_change
        self.assertEqual(C.shape, (6, 6))
        self.assertEqual(al.rango(C), 6)

    def test_independiente_de_la_semilla(self):
        """Mismos tipos, multiplicidades y orden con cualquier semilla."""
        V = crear_regular("S3", 2)
        referencia = decompose(V, seed=0)
        for seed in range(1, 6):
            with self.subTest(seed=seed):
                otra = decompose(V, seed=seed)
                self.assertEqual(self.tipos(otra), self.tipos(referencia))
                self.assertEqual(
                    [clave_canonica(U) for U in otra.tipos()],
                    [clave_canonica(U) for U in referencia.tipos()],
                )
                for a, b in zip(otra.tipos(), referencia.tipos()):
                    self.assertTrue(is_isomorphic(a, b).isomorfos)

    def test_empate_de_clave_no_depende_del_orden(self):
        """M1 ⊕ M2 y M2 ⊕ M1 listan los mismos tipos en el mismo orden."""
        M1, M2, _ = crear_modulos_v4()
        referencia = decompose(direct_sum(M1, M2)).tipos()
        for seed in range(4):
            with self.subTest(seed=seed):
                otra = decompose(direct_sum(M2, M1), seed=seed).tipos()
                self.assertEqual(len(otra), 2)
                for a, b in zip(otra, referencia):
                    self.assertTrue(is_isomorphic(a, b).isomorfos)

    def test_modulo_nulo(self):
        self.assertEqual(decompose(zero_module(grupo_por_nombre("C3"), make_field(2, 1))).summands, [])


# ─────────────────────────────────────────────────────────────────────────────
# 5. simple_modules()
# ─────────────────────────────────────────────────────────────────────────────

class TestSimpleModules(SimpleTestCase):
    """ITS(KG) con grados de End."""

    def test_c7_sobre_gf2(self):
        simples = simple_modules(grupo_por_nombre("C7"), make_field(2, 1))
        self.assertEqual([U.dim for U in simples.modules], [1, 3, 3])
        self.assertEqual(simples.end_degrees, [1, 3, 3])

    def test_s3_sobre_gf3(self):
        simples = simple_modules(grupo_por_nombre("S3"), make_field(3, 1))
        self.assertEqual([U.dim for U in simples.modules], [1, 1])

    def test_s3_sobre_gf2(self):
        simples = simple_modules(grupo_por_nombre("S3"), make_field(2, 1))
        self.assertEqual([U.dim for U in simples.modules], [1, 2])
        self.assertEqual(simples.end_degrees, [1, 1])

    def test_dos_a_dos_no_isomorfos(self):
        simples = simple_modules(grupo_por_nombre("A4"), make_field(2, 1)).modules
        for i, U in enumerate(simples):
            for V in simples[i + 1:]:
                self.assertFalse(is_isomorphic(U, V).isomorfos)

    def test_to_dict(self):
        simples = simple_modules(grupo_por_nombre("C3"), make_field(2, 1))
        self.assertEqual(
            simples.to_dict(),
            {"simples": [{"indice": 0, "dim": 1, "grado_end": 1}, {"indice": 1, "dim": 2, "grado_end": 2}]},
        )


# ─────────────────────────────────────────────────────────────────────────────
# 6. Clave canónica y forma estándar
# ─────────────────────────────────────────────────────────────────────────────

class TestClaveCanonica(SimpleTestCase):

    def test_modulo_de_dimension_uno(self):
        """Cada ρ(g) 1×1 aporta x + 1, que como entero es 3."""
        clave = clave_canonica(trivial_module(grupo_por_nombre("S3"), make_field(2, 1)))
        self.assertEqual(clave, (1, 1, 1, (3,) * 6, 1))

    def test_signo_en_caracteristica_tres(self):
        """x − 1 = x + 2 y x + 1 sobre GF(3): 5 y 4."""
        V = ModuloFactory.signo(grupo_por_nombre("S3"), make_field(3, 1))
        polinomios = clave_canonica(V)[3]
        self.assertEqual(sorted(set(polinomios)), [4, 5])
        self.assertEqual(polinomios[0], 5)

    def test_empate_entre_no_isomorfos(self):
        modulos = crear_modulos_v4()
        self.assertEqual(len({clave_canonica(M) for M in modulos}), 1)
        self.assertEqual(len({forma_estandar(M) for M in modulos}), 3)

    def test_forma_estandar_es_invariante(self):
        M = crear_modulos_v4()[2]
        K = M.field
        P = K.gf([[0, 1], [1, 1]])
        P_inv = np.linalg.inv(P)
        conjugado = rep_from_matrices(M.group, K, [P @ A @ P_inv for A in M.matrices])
        self.assertEqual(forma_estandar(conjugado), forma_estandar(M))

    def test_no_ciclico(self):
        """La suma de dos triviales no tiene vector cíclico."""
        T = trivial_module(grupo_por_nombre("C3"), make_field(2, 1))
        self.assertIsNone(forma_estandar(direct_sum(T, T)))
