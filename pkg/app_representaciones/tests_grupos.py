# app_representaciones/tests_grupos.py
"""
Tests de grupos de permutaciones.

Cubre:
- services/grupos.py :: group_from_generators()        (orden, identidad, topes)
- services/grupos.py :: conjugacy_classes()            (tamaños, orden de clases)
- services/grupos.py :: p_regular_class_count()
- services/grupos.py :: p_subgroups_up_to_conjugacy() / sylow_order()  (representantes canónicos)
- services/grupos.py :: normalizer() / right_transversal() / are_conjugate() / conjugate_subgroup()
- services/catalogo.py :: cargar_grupo()

Correr con:
    python manage.py test app_representaciones.tests_grupos --verbosity=2
"""
from django.test import SimpleTestCase

from app_representaciones.domain.errores import ErrorCapacidad, ErrorEntrada, ErrorSubgrupo
from app_representaciones.services.catalogo import cargar_grupo, grupo_por_nombre
from app_representaciones.services.grupos import (
    are_conjugate,
    conjugacy_classes,
    conjugate_subgroup,
    group_from_generators,
    normalizer,
    p_regular_class_count,
    p_subgroups_up_to_conjugacy,
    right_transversal,
    subgroup_from_elements,
    sylow_order,
    trivial_subgroup,
    whole_group,
)
from app_representaciones.services.limites import aplicar_limites


# ─────────────────────────────────────────────
# Helpers
# ─────────────────────────────────────────────

def crear_transposicion(G, a, b):
    """Subgrupo ⟨(a b)⟩ de un grupo de grado 3, con a y b 1-based."""
    imagen = list(range(G.degree))
    imagen[a - 1], imagen[b - 1] = b - 1, a - 1
    return subgroup_from_elements(G, [0, G.indice[tuple(imagen)]])


# ─────────────────────────────────────────────────────────────────────────────
# 1. Construcción
# ─────────────────────────────────────────────────────────────────────────────

class TestGroupFromGenerators(SimpleTestCase):
    """Clausura de los generadores y validaciones."""

    def test_ordenes_del_catalogo(self):
        esperados = {"C2": 2, "C3": 3, "S3": 6, "C7": 7, "A4": 12, "D8": 8, "Q8": 8, "S4": 24}
        for nombre, orden in esperados.items():
            with self.subTest(grupo=nombre):
                self.assertEqual(grupo_por_nombre(nombre).order, orden)

    def test_identidad_en_indice_cero(self):
        G = grupo_por_nombre("A4")
        self.assertEqual(G.elements[0], tuple(range(G.degree)))

    def test_sin_generadores_da_el_trivial(self):
        G = group_from_generators(3, [])
        self.assertEqual(G.order, 1)

    def test_generador_no_biyectivo(self):
        with self.assertRaises(ErrorEntrada):
            group_from_generators(3, [[1, 1, 2]])

    def test_generador_fuera_de_rango(self):
        with self.assertRaises(ErrorEntrada):
            group_from_generators(3, [[2, 3, 4]])

    def test_tope_de_orden(self):
        """S4 no entra con tope 10, ni por generadores ni por catálogo."""
        with aplicar_limites(max_orden_grupo=10):
            with self.assertRaises(ErrorCapacidad):
                group_from_generators(4, [[2, 1, 3, 4], [2, 3, 4, 1]])
            with self.assertRaises(ErrorCapacidad):
                cargar_grupo("S4")

    def test_catalogo_ignora_mayusculas(self):
        self.assertIs(cargar_grupo("s3"), cargar_grupo("S3"))

    def test_subconjunto_no_cerrado(self):
        """{1, (1 2 3)} no es subgrupo de S3."""
        G = grupo_por_nombre("S3")
        with self.assertRaises(ErrorSubgrupo):
            subgroup_from_elements(G, [0, G.indice[(1, 2, 0)]])

    def test_trivial_y_total(self):
        G = grupo_por_nombre("S3")
        self.assertEqual(trivial_subgroup(G).order, 1)
        self.assertEqual(whole_group(G).order, 6)
        self.assertIs(whole_group(G).parent, G)


# ─────────────────────────────────────────────────────────────────────────────
# 2. Clases de conjugación
# ─────────────────────────────────────────────────────────────────────────────

class TestClasesDeConjugacion(SimpleTestCase):
    """Tamaños y orden de las clases."""

    def test_s3(self):
        tamanos = [len(c) for c in conjugacy_classes(grupo_por_nombre("S3"))]
        self.assertEqual(tamanos, [1, 3, 2])

    def test_a4(self):
        tamanos = [len(c) for c in conjugacy_classes(grupo_por_nombre("A4"))]
        self.assertEqual(tamanos, [1, 3, 4, 4])

    def test_abeliano_tiene_clases_unitarias(self):
        clases = conjugacy_classes(grupo_por_nombre("C7"))
        self.assertEqual(len(clases), 7)
        self.assertTrue(all(len(c) == 1 for c in clases))

    def test_ecuacion_de_clases(self):
        for nombre in ("S3", "D8", "Q8", "S4"):
            with self.subTest(grupo=nombre):
                G = grupo_por_nombre(nombre)
                self.assertEqual(sum(len(c) for c in conjugacy_classes(G)), G.order)

    def test_primera_clase_es_la_identidad(self):
        self.assertEqual(conjugacy_classes(grupo_por_nombre("S4"))[0], (0,))


class TestClasesPRegulares(SimpleTestCase):
    """Cantidad de clases de orden coprimo con p."""

    def test_casos_conocidos(self):
        casos = [
            ("S3", 2, 2), ("S3", 3, 2), ("S3", 5, 3),
            ("C7", 2, 7), ("C7", 7, 1),
            ("A4", 2, 3), ("A4", 3, 2),
            ("D8", 2, 1), ("Q8", 2, 1),
            ("S4", 2, 2), ("S4", 3, 4),
        ]
        for nombre, p, esperado in casos:
            with self.subTest(grupo=nombre, p=p):
                self.assertEqual(p_regular_class_count(grupo_por_nombre(nombre), p), esperado)

    def test_p_no_primo(self):
        with self.assertRaises(ErrorEntrada):
            p_regular_class_count(grupo_por_nombre("S3"), 4)


# ─────────────────────────────────────────────────────────────────────────────
# 3. p-subgrupos
# ─────────────────────────────────────────────────────────────────────────────

class TestPSubgrupos(SimpleTestCase):
    """Un representante por clase, ordenados por orden."""

    def ordenes(self, nombre, p):
        return [Q.order for Q in p_subgroups_up_to_conjugacy(grupo_por_nombre(nombre), p)]

    def test_s3(self):
        self.assertEqual(self.ordenes("S3", 2), [1, 2])
        self.assertEqual(self.ordenes("S3", 3), [1, 3])

    def test_a4_en_caracteristica_2(self):
        """1, ⟨(12)(34)⟩ y V4."""
        self.assertEqual(self.ordenes("A4", 2), [1, 2, 4])

    def test_p_que_no_divide(self):
        self.assertEqual(self.ordenes("C7", 2), [1])

    def test_nombres_y_padre(self):
        G = grupo_por_nombre("S3")
        trivial, C2 = p_subgroups_up_to_conjugacy(G, 2)
        self.assertEqual((trivial.nombre, C2.nombre), ("1", "P2"))
        self.assertIs(C2.parent, G)

    def test_representante_canonico(self):
        """El C2 elegido en S3 es el de índices {0, 1}: ⟨(2 3)⟩."""
        C2 = p_subgroups_up_to_conjugacy(grupo_por_nombre("S3"), 2)[1]
        self.assertEqual(C2.elements, ((0, 1, 2), (0, 2, 1)))

    def test_orden_de_sylow(self):
        self.assertEqual(sylow_order(grupo_por_nombre("S4"), 2), 8)
        self.assertEqual(sylow_order(grupo_por_nombre("A4"), 3), 3)
        self.assertEqual(sylow_order(grupo_por_nombre("C7"), 2), 1)

    def test_el_ultimo_es_un_sylow(self):
        for nombre, p in [("S3", 2), ("A4", 2), ("S4", 2), ("S4", 3)]:
            with self.subTest(grupo=nombre, p=p):
                G = grupo_por_nombre(nombre)
                self.assertEqual(p_subgroups_up_to_conjugacy(G, p)[-1].order, sylow_order(G, p))

    def test_determinista(self):
        G = grupo_por_nombre("S4")
        primera = [Q.elements for Q in p_subgroups_up_to_conjugacy(G, 2)]
        segunda = [Q.elements for Q in p_subgroups_up_to_conjugacy(G, 2)]
        self.assertEqual(primera, segunda)


# ─────────────────────────────────────────────────────────────────────────────
# 4. Normalizadores, transversales y conjugación
# ─────────────────────────────────────────────────────────────────────────────

class TestNormalizadorYTransversal(SimpleTestCase):

    def test_normalizador_de_c2_en_s3(self):
        G = grupo_por_nombre("S3")
        self.assertEqual(normalizer(G, crear_transposicion(G, 1, 2)).order, 2)

    def test_normalizador_de_un_normal(self):
        """C3 ◁ S3 y V4 ◁ A4."""
        S3 = grupo_por_nombre("S3")
        C3 = p_subgroups_up_to_conjugacy(S3, 3)[1]
        self.assertEqual(normalizer(S3, C3).order, 6)
        A4 = grupo_por_nombre("A4")
        V4 = p_subgroups_up_to_conjugacy(A4, 2)[-1]
        self.assertEqual(normalizer(A4, V4).order, 12)

    def test_transversal_de_g_en_g(self):
        G = grupo_por_nombre("S3")
        self.assertEqual(right_transversal(G, whole_group(G)), [0])

    def test_transversal_tamano_e_identidad(self):
        G = grupo_por_nombre("S3")
        transversal = right_transversal(G, crear_transposicion(G, 1, 2))
        self.assertEqual(len(transversal), 3)
        self.assertEqual(transversal[0], 0)

    def test_transversal_del_trivial(self):
        G = grupo_por_nombre("C7")
        self.assertEqual(right_transversal(G, trivial_subgroup(G)), list(range(7)))

    def test_transposiciones_conjugadas(self):
        G = grupo_por_nombre("S3")
        A = crear_transposicion(G, 1, 2)
        B = crear_transposicion(G, 1, 3)
        g = are_conjugate(G, A, B)
        self.assertIsNotNone(g)
        self.assertEqual(sorted(G.conjugar(G.indices_de(A), g)), sorted(G.indices_de(B)))

    def test_conjugar_un_subgrupo(self):
        """Conjugar por el testigo de are_conjugate lleva A sobre B."""
        G = grupo_por_nombre("S3")
        A = crear_transposicion(G, 1, 2)
        B = crear_transposicion(G, 1, 3)
        conjugado = conjugate_subgroup(G, A, are_conjugate(G, A, B))
        self.assertEqual(conjugado.elements, B.elements)
        self.assertIs(conjugado.parent, G)

    def test_ordenes_distintos_no_conjugan(self):
        G = grupo_por_nombre("S3")
        C3 = p_subgroups_up_to_conjugacy(G, 3)[1]
        self.assertIsNone(are_conjugate(G, crear_transposicion(G, 1, 2), C3))
