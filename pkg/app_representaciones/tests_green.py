# app_representaciones/tests_green.py
"""
Tests de proyectividad relativa y correspondencia de Green.

Cubre:
- services/green.py :: is_relatively_projective()   (criterio de Higman contra Ind∘Res)
- services/green.py :: vertex() / source() / vertex_source()
- services/green.py :: green_correspondent() / comparte_vertice_y_fuente()

Correr con:
    python manage.py test app_representaciones.tests_green --verbosity=2
"""
import numpy as np
from django.test import SimpleTestCase

from app_representaciones.domain.errores import ErrorModuloDescomponible, ErrorSubgrupo
from app_representaciones.services.catalogo import grupo_por_nombre
from app_representaciones.services.cuerpos import make_field
from app_representaciones.services.green import (
    comparte_vertice_y_fuente,
    green_correspondent,
    is_relatively_projective,
    source,
    vertex,
    vertex_source,
)
from app_representaciones.services.grupos import (
    normalizer,
    p_subgroups_up_to_conjugacy,
    trivial_subgroup,
    whole_group,
)
from app_representaciones.services.meataxe import decompose, is_component, is_isomorphic, simple_modules
from app_representaciones.services.modulos import (
    induce,
    regular_module,
    relative_trace,
    restrict_subgroup,
    trivial_module,
)


# ─────────────────────────────────────────────
# Helpers
# ─────────────────────────────────────────────

def crear_indescomponibles(nombre, p):
    """Los simples y los sumandos del regular (PIMs) de GF(p)G."""
    G, F = grupo_por_nombre(nombre), make_field(p, 1)
    return simple_modules(G, F).modules + decompose(regular_module(G, F)).tipos()


def crear_trivial(nombre, p):
    return trivial_module(grupo_por_nombre(nombre), make_field(p, 1))


# ─────────────────────────────────────────────────────────────────────────────
# 1. is_relatively_projective()
# ─────────────────────────────────────────────────────────────────────────────

class TestProyectividadRelativa(SimpleTestCase):
    """Criterio de Higman como sistema lineal."""

    def test_todo_es_proyectivo_respecto_de_g(self):
        V = crear_trivial("S3", 2)
        self.assertTrue(is_relatively_projective(V, whole_group(V.group)))

    def test_trivial_no_es_proyectivo(self):
        V = crear_trivial("S3", 2)
        self.assertFalse(is_relatively_projective(V, trivial_subgroup(V.group)))

    def test_regular_es_proyectivo(self):
        V = regular_module(grupo_por_nombre("S3"), make_field(2, 1))
        self.assertTrue(is_relatively_projective(V, trivial_subgroup(V.group)))

    def test_phi_tiene_traza_identidad(self):
        V = crear_trivial("S3", 2)
        Q = p_subgroups_up_to_conjugacy(V.group, 2)[1]
        resultado = is_relatively_projective(V, Q)
        self.assertTrue(resultado.proyectivo)
        self.assertTrue(np.array_equal(relative_trace(V, Q, resultado.phi), V.identidad))

    def test_coincide_con_ind_res(self):
        """Q-proyectivo si y solo si V | Ind_Q^G Res_Q V."""
        for nombre, p in [("S3", 2), ("S3", 3), ("A4", 2)]:
            G = grupo_por_nombre(nombre)
            for V in crear_indescomponibles(nombre, p):
                for Q in p_subgroups_up_to_conjugacy(G, p):
                    with self.subTest(grupo=nombre, p=p, dim=V.dim, Q=Q.order):
                        oraculo = is_component(V, induce(restrict_subgroup(V, Q), G))
                        self.assertEqual(is_relatively_projective(V, Q).proyectivo, oraculo)

    def test_q_fuera_del_grupo(self):
        V = crear_trivial("S3", 2)
        with self.assertRaises(ErrorSubgrupo):
            is_relatively_projective(V, grupo_por_nombre("C7"))


# ─────────────────────────────────────────────────────────────────────────────
# 2. Vértices y fuentes
# ─────────────────────────────────────────────────────────────────────────────

class TestVerticeYFuente(SimpleTestCase):

    def test_vertice_del_trivial_es_el_sylow(self):
        self.assertEqual(vertex(crear_trivial("S3", 2)).order, 2)
        self.assertEqual(vertex(crear_trivial("S3", 3)).order, 3)
        self.assertEqual(vertex(crear_trivial("A4", 2)).order, 4)

    def test_proyectivos_tienen_vertice_trivial(self):
        G, F = grupo_por_nombre("S3"), make_field(2, 1)
        for P in decompose(regular_module(G, F)).tipos():
            with self.subTest(dim=P.dim):
                self.assertEqual(vertex(P).order, 1)

    def test_vertice_es_representante(self):
        """El vértice es uno de los p-subgrupos representativos, con su nombre."""
        V = crear_trivial("S3", 2)
        Q = vertex(V)
        self.assertEqual(Q.nombre, "P2")
        self.assertIs(Q.parent, V.group)

    def test_fuente_del_trivial(self):
        """Fuente del trivial: el trivial del vértice."""
        par = vertex_source(crear_trivial("S3", 3))
        self.assertEqual(par.source.dim, 1)
        self.assertTrue(all(int(M[0, 0]) == 1 for M in par.source.matrices))
        self.assertIs(par.source.group.parent, par.vertex.parent)

    def test_fuente_de_un_proyectivo(self):
        G, F = grupo_por_nombre("S3"), make_field(2, 1)
        for P in decompose(regular_module(G, F)).tipos():
            with self.subTest(dim=P.dim):
                self.assertEqual(source(P, vertex(P)).dim, 1)

    def test_fuente_induce_de_vuelta(self):
        for V in crear_indescomponibles("A4", 2):
            with self.subTest(dim=V.dim):
                par = vertex_source(V)
                self.assertTrue(is_component(V, induce(par.source, V.group)))

    def test_vertice_de_un_descomponible(self):
        V = regular_module(grupo_por_nombre("S3"), make_field(2, 1))
        with self.assertRaises(ErrorModuloDescomponible):
            vertex(V)


# ─────────────────────────────────────────────────────────────────────────────
# 3. green_correspondent()
# ─────────────────────────────────────────────────────────────────────────────

class TestCorrespondenciaDeGreen(SimpleTestCase):

    def test_h_igual_a_g_devuelve_v(self):
        V = crear_trivial("S3", 3)
        Q = vertex(V)
        self.assertIs(green_correspondent(V, Q, whole_group(V.group)), V)

    def test_normalizador_es_g(self):
        """C3 ◁ S3: N_G(Q) = G y la correspondiente es V."""
        V = crear_trivial("S3", 3)
        Q = vertex(V)
        H = normalizer(V.group, Q)
        self.assertIs(green_correspondent(V, Q, H), V)

    def test_trivial_a_c2(self):
        """Gr(trivial) en N(C2) = C2 es el trivial de C2."""
        V = crear_trivial("S3", 2)
        Q = vertex(V)
        H = normalizer(V.group, Q)
        correspondiente = green_correspondent(V, Q, H)
        self.assertEqual(correspondiente.dim, 1)
        self.assertEqual(vertex(correspondiente).order, Q.order)

    def test_correspondiente_es_sumando_de_la_restriccion(self):
        for V in crear_indescomponibles("S3", 2) + crear_indescomponibles("A4", 2):
            Q = vertex(V)
            H = normalizer(V.group, Q)
            with self.subTest(grupo=V.group.nombre, dim=V.dim, Q=Q.order):
                correspondiente = green_correspondent(V, Q, H)
                self.assertTrue(is_component(correspondiente, restrict_subgroup(V, correspondiente.group)))

    def test_h_sin_el_normalizador(self):
        """N_G(1) = G: un C2 no alcanza."""
        V = regular_module(grupo_por_nombre("S3"), make_field(2, 1))
        P = decompose(V).tipos()[0]
        C2 = p_subgroups_up_to_conjugacy(V.group, 2)[1]
        with self.assertRaises(ErrorSubgrupo):
            green_correspondent(P, trivial_subgroup(V.group), C2)

    def test_correspondientes_distintos_para_tipos_distintos(self):
        """Los PIMs de S3 en 2 con Q = 1 y H = G quedan fijos y no son isomorfos."""
        V = regular_module(grupo_por_nombre("S3"), make_field(2, 1))
        tipos = decompose(V).tipos()
        G = V.group
        Q = trivial_subgroup(G)
        a = green_correspondent(tipos[0], Q, whole_group(G))
        b = green_correspondent(tipos[1], Q, whole_group(G))
        self.assertFalse(is_isomorphic(a, b).isomorfos)

    def test_correspondiente_comparte_vertice_y_fuente(self):
        for V in crear_indescomponibles("S3", 2) + crear_indescomponibles("A4", 2):
            Q = vertex(V)
            H = normalizer(V.group, Q)
            with self.subTest(grupo=V.group.nombre, dim=V.dim, Q=Q.order):
                self.assertTrue(comparte_vertice_y_fuente(V, green_correspondent(V, Q, H), Q))

    def test_otro_vertice_no_comparte_el_par(self):
        """El regular de C2 tiene vértice 1, no el C2 del trivial de S3."""
        V = crear_trivial("S3", 2)
        Q = vertex(V)
        H = normalizer(V.group, Q)
        self.assertFalse(comparte_vertice_y_fuente(V, regular_module(H, V.field), Q))
