# app_representaciones/tests_modulos.py
"""
Tests de módulos y funtores.

Cubre:
- services/modulos.py :: rep_from_matrices() / validate()
- services/modulos.py :: trivial_module() / regular_module() / direct_sum()
- services/modulos.py :: extend_scalars() / restrict_scalars() / frobenius_twist()
- services/modulos.py :: restrict_subgroup() / induce() / conjugate_module()
- services/modulos.py :: hom_space() / end_space()

Correr con:
    python manage.py test app_representaciones.tests_modulos --verbosity=2
"""
import numpy as np
from django.test import SimpleTestCase

from app_representaciones.domain.errores import ErrorEntrada, ErrorSubgrupo
from app_representaciones.factories import ModuloFactory
from app_representaciones.services.catalogo import grupo_por_nombre
from app_representaciones.services.cuerpos import automorphisms, make_field
from app_representaciones.services.grupos import p_subgroups_up_to_conjugacy, trivial_subgroup
from app_representaciones.services.meataxe import decompose, is_isomorphic, is_simple
from app_representaciones.services.modulos import (
    conjugate_module,
    direct_sum,
    end_space,
    extend_scalars,
    frobenius_twist,
    hom_space,
    induce,
    regular_module,
    rep_from_matrices,
    restrict_scalars,
    restrict_subgroup,
    trivial_module,
    zero_module,
)


# ─────────────────────────────────────────────
# Helpers
# ─────────────────────────────────────────────

def crear_cubico_c7():
    """GF(2)C7 con el generador actuando por la compañera de x³ + x + 1."""
    return ModuloFactory.companera(grupo_por_nombre("C7"), make_field(2, 1), [1, 1, 0])


def crear_cuadratico_c3():
    """El simple de dim 2 de GF(2)C3: compañera de x² + x + 1."""
    return ModuloFactory.companera(grupo_por_nombre("C3"), make_field(2, 1), [1, 1])


def crear_omega_c3():
    """GF(4)C3 de dim 1 con el generador actuando por α, de orden 3."""
    return ModuloFactory.escalar(grupo_por_nombre("C3"), make_field(2, 2), [2])


# ─────────────────────────────────────────────────────────────────────────────
# 1. Construcción
# ─────────────────────────────────────────────────────────────────────────────

class TestConstruccion(SimpleTestCase):
    """Validación de las relaciones del grupo."""

    def test_trivial_y_regular(self):
        G, F = grupo_por_nombre("S3"), make_field(3, 1)
        self.assertEqual(trivial_module(G, F).dim, 1)
        self.assertEqual(regular_module(G, F).dim, 6)

    def test_regular_sin_puntos_fijos(self):
        """ρ(g) del regular no tiene unos en la diagonal para g ≠ 1: traza 0."""
        V = regular_module(grupo_por_nombre("C3"), make_field(2, 1))
        for g in range(1, 3):
            self.assertEqual(np.count_nonzero(V.element_image(g).diagonal()), 0)

    def test_matrices_que_no_respetan_relaciones(self):
        """En C3 el generador debe cumplir x³ = 1: la compañera de x² + 1 no sirve."""
        with self.assertRaises(ErrorEntrada):
            ModuloFactory.companera(grupo_por_nombre("C3"), make_field(2, 1), [1, 0])

    def test_cantidad_de_matrices(self):
        G, F = grupo_por_nombre("S3"), make_field(2, 1)
        with self.assertRaises(ErrorEntrada):
            rep_from_matrices(G, F, [F.gf.Identity(2)])

    def test_matriz_singular(self):
        G, F = grupo_por_nombre("C2"), make_field(2, 1)
        with self.assertRaises(ErrorEntrada):
            rep_from_matrices(G, F, [F.gf.Zeros((1, 1))])

    def test_suma_con_el_nulo(self):
        W = crear_cubico_c7()
        suma = direct_sum(W, zero_module(W.group, W.field))
        self.assertEqual(suma.dim, 3)
        self.assertTrue(np.array_equal(suma.matrices[0], W.matrices[0]))

    def test_suma_de_cuerpos_distintos(self):
        G = grupo_por_nombre("C3")
        with self.assertRaises(ErrorEntrada):
            direct_sum(trivial_module(G, make_field(2, 1)), trivial_module(G, make_field(2, 2)))


# ─────────────────────────────────────────────────────────────────────────────
# 2. Cambio de escalares
# ─────────────────────────────────────────────────────────────────────────────

class TestCambioDeEscalares(SimpleTestCase):
    """Extensión, restricción y twist de Frobenius."""

    def test_extender_el_trivial(self):
        V = extend_scalars(trivial_module(grupo_por_nombre("C3"), make_field(2, 1)), make_field(2, 2))
        self.assertEqual((V.dim, V.field.n), (1, 2))

    def test_restringir_el_trivial_duplica(self):
        """Res de GF(4) a GF(2) del trivial = trivial ⊕ trivial."""
        G = grupo_por_nombre("C3")
        V = restrict_scalars(trivial_module(G, make_field(2, 2)), make_field(2, 1))
        self.assertEqual(V.dim, 2)
        descomposicion = decompose(V)
        self.assertEqual([(U.dim, m) for U, m in descomposicion.summands], [(1, 2)])

    def test_restringir_raiz_septima(self):
        """El módulo de dim 1 de GF(8)C7 con α restringe al simple de dim 3."""
        V = ModuloFactory.escalar(grupo_por_nombre("C7"), make_field(2, 3), [2])
        R = restrict_scalars(V, make_field(2, 1))
        self.assertEqual(R.dim, 3)
        self.assertTrue(is_simple(R).es_simple)

    def test_restringir_omega_da_el_cuadratico(self):
        R = restrict_scalars(crear_omega_c3(), make_field(2, 1))
        self.assertTrue(is_isomorphic(R, crear_cuadratico_c3()).isomorfos)

    def test_restriccion_respeta_relaciones(self):
        V = ModuloFactory.escalar(grupo_por_nombre("C7"), make_field(2, 3), [2])
        R = restrict_scalars(V, make_field(2, 1))
        self.assertIs(R.validate(), R)

    def test_twist_por_la_identidad(self):
        V = crear_omega_c3()
        self.assertIs(frobenius_twist(V, automorphisms(V.field)[0]), V)

    def test_twist_de_omega(self):
        """α ↦ α² = α + 1: el twist no es isomorfo al original."""
        V = crear_omega_c3()
        torcido = frobenius_twist(V, automorphisms(V.field)[1])
        self.assertEqual(int(torcido.matrices[0][0, 0]), 3)
        self.assertFalse(is_isomorphic(V, torcido).isomorfos)

    def test_twist_de_una_extension(self):
        """Lo que viene del cuerpo primo queda fijo por Frobenius."""
        V = extend_scalars(crear_cuadratico_c3(), make_field(2, 2))
        torcido = frobenius_twist(V, automorphisms(V.field)[1])
        self.assertTrue(is_isomorphic(V, torcido).isomorfos)

    def test_twist_de_otro_cuerpo(self):
        with self.assertRaises(ErrorEntrada):
            frobenius_twist(crear_omega_c3(), automorphisms(make_field(2, 3))[1])


# ─────────────────────────────────────────────────────────────────────────────
# 3. Restricción e inducción
# ─────────────────────────────────────────────────────────────────────────────

class TestSubgrupos(SimpleTestCase):
    """Res_H^G, Ind_H^G y conjugación de módulos."""

    def test_restringir_al_mismo_grupo(self):
        V = regular_module(grupo_por_nombre("S3"), make_field(2, 1))
        R = restrict_subgroup(V, V.group)
        for A, B in zip(R.matrices, V.matrices):
            self.assertTrue(np.array_equal(A, B))

    def test_restringir_el_regular_a_c2(self):
        """Res_{C2}(GF(2)S3) ≅ 3 copias del regular de C2."""
        G = grupo_por_nombre("S3")
        C2 = p_subgroups_up_to_conjugacy(G, 2)[1]
        R = restrict_subgroup(regular_module(G, make_field(2, 1)), C2)
        descomposicion = decompose(R)
        self.assertEqual([(U.dim, m) for U, m in descomposicion.summands], [(2, 3)])

    def test_inducir_de_g_a_g(self):
        V = crear_cubico_c7()
        self.assertTrue(is_isomorphic(induce(V, V.group), V).isomorfos)

    def test_dimension_de_la_inducida(self):
        G = grupo_por_nombre("S3")
        C3 = p_subgroups_up_to_conjugacy(G, 3)[1]
        U = trivial_module(C3, make_field(2, 1))
        self.assertEqual(induce(U, G).dim, 2)

    def test_inducir_el_trivial_da_la_permutacion(self):
        """Ind_{C2}^{S3}(trivial) ≅ módulo de permutación de 3 puntos."""
        G, F = grupo_por_nombre("S3"), make_field(2, 1)
        C2 = p_subgroups_up_to_conjugacy(G, 2)[1]
        inducido = induce(restrict_subgroup(trivial_module(G, F), C2), G)
        self.assertTrue(is_isomorphic(inducido, ModuloFactory.permutacion(G, F)).isomorfos)

    def test_inducida_respeta_relaciones(self):
        G = grupo_por_nombre("A4")
        V4 = p_subgroups_up_to_conjugacy(G, 2)[-1]
        U = trivial_module(V4, make_field(2, 1))
        inducido = induce(U, G)
        self.assertIs(inducido.validate(), inducido)

    def test_inducir_desde_un_no_subgrupo(self):
        U = trivial_module(grupo_por_nombre("C7"), make_field(2, 1))
        with self.assertRaises(ErrorSubgrupo):
            induce(U, grupo_por_nombre("S3"))

    def test_restringir_al_trivial(self):
        G = grupo_por_nombre("S3")
        R = restrict_subgroup(regular_module(G, make_field(3, 1)), trivial_subgroup(G))
        self.assertEqual(R.dim, 6)

    def test_conjugar_un_modulo(self):
        """El trivial de ⟨(2 3)⟩ conjugado por (1 2) es el trivial de ⟨(1 3)⟩."""
        G, F = grupo_por_nombre("S3"), make_field(2, 1)
        C2 = p_subgroups_up_to_conjugacy(G, 2)[1]
        U = trivial_module(C2, F)
        conjugado = conjugate_module(U, G.indice[(1, 0, 2)])
        self.assertEqual(conjugado.group.elements, ((0, 1, 2), (2, 1, 0)))
        self.assertEqual(conjugado.dim, 1)


# ─────────────────────────────────────────────────────────────────────────────
# 4. Hom
# ─────────────────────────────────────────────────────────────────────────────

class TestHom(SimpleTestCase):
    """Dimensiones de espacios de morfismos."""

    def test_hom_trivial_trivial(self):
        V = trivial_module(grupo_por_nombre("S3"), make_field(3, 1))
        self.assertEqual(hom_space(V, V).dim, 1)

    def test_hom_trivial_signo(self):
        G, F = grupo_por_nombre("S3"), make_field(3, 1)
        self.assertEqual(hom_space(trivial_module(G, F), ModuloFactory.signo(G, F)).dim, 0)

    def test_end_del_cubico(self):
        """End(W) ≅ GF(8): dimensión 3 sobre GF(2)."""
        self.assertEqual(end_space(crear_cubico_c7()).dim, 3)

    def test_end_de_la_suma_doble(self):
        """End(W ⊕ W) = M₂(End W): dimensión 4·3."""
        W = crear_cubico_c7()
        self.assertEqual(end_space(direct_sum(W, W)).dim, 12)

    def test_la_base_entrelaza(self):
        """ρ_V(g)·M = M·ρ_U(g) para cada M de la base."""
        G, F = grupo_por_nombre("S3"), make_field(2, 1)
        V = ModuloFactory.permutacion(G, F)
        U = regular_module(G, F)
        H = hom_space(V, U)
        self.assertGreater(H.dim, 0)
        for M in H.basis:
            self.assertEqual(M.shape, (V.dim, U.dim))
            for A, B in zip(V.matrices, U.matrices):
                self.assertTrue(np.array_equal(A @ M, M @ B))

    def test_forma_en_ambos_sentidos(self):
        """hom_space(V, U) da matrices dim V × dim U; al revés, dim U × dim V."""
        G, F = grupo_por_nombre("S3"), make_field(2, 1)
        V = ModuloFactory.permutacion(G, F)
        U = regular_module(G, F)
        self.assertEqual(hom_space(V, U).basis[0].shape, (3, 6))
        self.assertEqual(hom_space(U, V).basis[0].shape, (6, 3))

    def test_end_del_regular(self):
        """End(KG) ≅ KG: dimensión |G|."""
        V = regular_module(grupo_por_nombre("S3"), make_field(2, 1))
        self.assertEqual(end_space(V).dim, 6)
