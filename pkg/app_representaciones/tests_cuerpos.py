# app_representaciones/tests_cuerpos.py
"""
Tests de cuerpos finitos.

Cubre:
- services/cuerpos.py :: make_field()       (polinomio canónico, topes)
- services/cuerpos.py :: embed()            (raíces, morfismo, triángulos)
- services/cuerpos.py :: automorphisms()    (Frobenius, composición)
- services/cuerpos.py :: field_arith()      (suma, producto, inverso, potencia)

Correr con:
    python manage.py test app_representaciones.tests_cuerpos --verbosity=2
"""
import numpy as np
from django.test import SimpleTestCase

from app_representaciones.domain.errores import (
    ErrorCapacidad,
    ErrorDivisionPorCero,
    ErrorEntrada,
    ErrorSubcuerpo,
)
from app_representaciones.services.cuerpos import (
    FieldElement,
    automorphisms,
    compositum,
    element_from_int,
    embed,
    field_arith,
    make_field,
)
from app_representaciones.services.limites import aplicar_limites


# ─────────────────────────────────────────────
# Helpers
# ─────────────────────────────────────────────

def crear_elemento(p, n, coeficientes):
    return FieldElement(make_field(p, n), tuple(coeficientes))


# ─────────────────────────────────────────────────────────────────────────────
# 1. make_field()
# ─────────────────────────────────────────────────────────────────────────────

class TestMakeField(SimpleTestCase):
    """Construcción con el polinomio mínimo canónico."""

    def test_cuerpo_primo(self):
        """GF(2) guarda x como polinomio mínimo."""
        K = make_field(2, 1)
        self.assertEqual(K.order, 2)
        self.assertEqual(K.min_poly, (0, 1))

    def test_gf8_usa_x3_x_1(self):
        """x³ + x + 1 es el menor cúbico irreducible sobre GF(2)."""
        self.assertEqual(make_field(2, 3).min_poly, (1, 1, 0, 1))

    def test_gf9_usa_x2_1(self):
        """x² + 1 es el menor cuadrático irreducible sobre GF(3)."""
        self.assertEqual(make_field(3, 2).min_poly, (1, 0, 1))

    def test_misma_instancia_en_llamadas_repetidas(self):
        self.assertIs(make_field(2, 4), make_field(2, 4))

    def test_p_no_primo(self):
        with self.assertRaises(ErrorEntrada):
            make_field(4, 1)

    def test_grado_cero(self):
        with self.assertRaises(ErrorEntrada):
            make_field(2, 0)

    def test_tope_de_tamano(self):
        """p^n por encima del tope vigente se rechaza sin construir nada."""
        with aplicar_limites(max_tamano_cuerpo=100):
            with self.assertRaises(ErrorCapacidad):
                make_field(2, 7)

    def test_compositum(self):
        """GF(4)·GF(8) = GF(64)."""
        self.assertEqual(compositum(make_field(2, 2), make_field(2, 3)).n, 6)


# ─────────────────────────────────────────────────────────────────────────────
# 2. embed()
# ─────────────────────────────────────────────────────────────────────────────

class TestEmbed(SimpleTestCase):
    """Inclusiones canónicas y compatibles."""

    def test_cuerpo_primo_va_identico(self):
        """GF(2) → GF(4): 1 ↦ 1."""
        K, L = make_field(2, 1), make_field(2, 2)
        self.assertEqual(int(embed(K, L)(K.gf(1))), 1)

    def test_imagen_del_generador_es_raiz(self):
        """La imagen de α ∈ GF(4) en GF(16) anula x² + x + 1."""
        K, L = make_field(2, 2), make_field(2, 4)
        b = L.gf(embed(K, L).image_of_generator)
        self.assertEqual(int(b ** 2 + b + 1), 0)

    def test_grado_que_no_divide(self):
        """GF(4) → GF(8): 2 no divide a 3."""
        with self.assertRaises(ErrorSubcuerpo):
            embed(make_field(2, 2), make_field(2, 3))

    def test_caracteristica_distinta(self):
        with self.assertRaises(ErrorEntrada):
            embed(make_field(2, 1), make_field(3, 2))

    def test_es_morfismo_de_anillos(self):
        """Aditiva y multiplicativa sobre todos los pares de GF(4)."""
        K, L = make_field(2, 2), make_field(2, 4)
        e = embed(K, L)
        for a in K.elementos():
            for b in K.elementos():
                self.assertEqual(int(e(a * b)), int(e(a) * e(b)))
                self.assertEqual(int(e(a + b)), int(e(a) + e(b)))

    def test_triangulo_conmuta(self):
        """GF(4) → GF(16) → GF(256) coincide con GF(4) → GF(256)."""
        K, M, L = make_field(2, 2), make_field(2, 4), make_field(2, 8)
        directo = embed(K, L)(K.elementos())
        en_dos_pasos = embed(M, L)(embed(K, M)(K.elementos()))
        self.assertTrue(np.array_equal(directo, en_dos_pasos))

    def test_triangulo_con_subcuerpos_coprimos(self):
        """GF(9) y GF(27) dentro de GF(3^6) comparten el cuerpo primo."""
        K2, K3, L = make_field(3, 2), make_field(3, 3), make_field(3, 6)
        F = make_field(3, 1)
        via_2 = embed(K2, L)(embed(F, K2)(F.elementos()))
        via_3 = embed(K3, L)(embed(F, K3)(F.elementos()))
        self.assertTrue(np.array_equal(via_2, via_3))

    def test_coordenadas_invierten_la_inclusion(self):
        """Las coordenadas de ι(a) sobre la base de GF(16)/GF(4) son (a, 0)."""
        K, L = make_field(2, 2), make_field(2, 4)
        e = embed(K, L)
        coordenadas = e.coordenadas(e(K.elementos()))
        self.assertTrue(np.array_equal(coordenadas[:, 0], K.elementos()))
        self.assertFalse(np.any(coordenadas[:, 1]))


# ─────────────────────────────────────────────────────────────────────────────
# 3. automorphisms()
# ─────────────────────────────────────────────────────────────────────────────

class TestAutomorfismos(SimpleTestCase):
    """El grupo de Galois de GF(p^n) sobre GF(p)."""

    def test_gf2_solo_identidad(self):
        autos = automorphisms(make_field(2, 1))
        self.assertEqual(len(autos), 1)
        self.assertTrue(autos[0].es_identidad())

    def test_gf8_tiene_tres(self):
        self.assertEqual(len(automorphisms(make_field(2, 3))), 3)

    def test_frobenius_de_gf9_es_involucion(self):
        """x ↦ x³ aplicado dos veces es la identidad sobre todo GF(9)."""
        K = make_field(3, 2)
        sigma = automorphisms(K)[1]
        E = K.elementos()
        self.assertTrue(np.array_equal(sigma(sigma(E)), E))
        self.assertFalse(np.array_equal(sigma(E), E))

    def test_compose_e_inverse(self):
        K = make_field(2, 3)
        sigma = automorphisms(K)[1]
        self.assertTrue(sigma.compose(sigma.inverse()).es_identidad())
        self.assertEqual(sigma.compose(sigma).power, 2)

    def test_frobenius_fija_el_cuerpo_primo(self):
        K = make_field(2, 4)
        sigma = automorphisms(K)[1]
        primos = embed(make_field(2, 1), K)(make_field(2, 1).elementos())
        self.assertTrue(np.array_equal(sigma(primos), primos))


# ─────────────────────────────────────────────────────────────────────────────
# 4. field_arith()
# ─────────────────────────────────────────────────────────────────────────────

class TestFieldArith(SimpleTestCase):
    """Aritmética sobre la codificación por coeficientes."""

    def test_uno_mas_uno_en_gf2(self):
        uno = crear_elemento(2, 1, [1])
        self.assertEqual(field_arith(uno, uno, "add").coeffs, (0,))

    def test_x_por_x_en_gf4(self):
        """x·x = x + 1 módulo x² + x + 1."""
        x = crear_elemento(2, 2, [0, 1])
        self.assertEqual(field_arith(x, x, "mul").coeffs, (1, 1))

    def test_inverso_en_gf8(self):
        """a·a⁻¹ = 1 para todo a ≠ 0."""
        K = make_field(2, 3)
        for entero in range(1, K.order):
            a = element_from_int(K, entero)
            producto = field_arith(a, field_arith(a, None, "inv"), "mul")
            self.assertEqual(producto.to_int(), 1)

    def test_potencia_de_orden_del_grupo(self):
        """a^(q-1) = 1 en GF(9)."""
        K = make_field(3, 2)
        a = element_from_int(K, 5)
        self.assertEqual(field_arith(a, K.order - 1, "pow").to_int(), 1)

    def test_inverso_de_cero(self):
        cero = crear_elemento(2, 3, [0, 0, 0])
        with self.assertRaisesMessage(ErrorDivisionPorCero, "Inverso: 0 no tiene inverso"):
            field_arith(cero, None, "inv")

    def test_potencia_negativa_de_cero(self):
        cero = crear_elemento(3, 1, [0])
        with self.assertRaisesMessage(ErrorDivisionPorCero, "Potencia:"):
            field_arith(cero, -1, "pow")

    def test_operacion_desconocida(self):
        uno = crear_elemento(2, 1, [1])
        with self.assertRaises(ErrorEntrada):
            field_arith(uno, uno, "div")

    def test_operandos_de_cuerpos_distintos(self):
        a = crear_elemento(2, 2, [1, 0])
        b = crear_elemento(2, 3, [1, 0, 0])
        with self.assertRaisesMessage(ErrorEntrada, "Suma: los operandos"):
            field_arith(a, b, "add")

    def test_coeficientes_fuera_de_rango(self):
        with self.assertRaises(ErrorEntrada):
            crear_elemento(3, 2, [3, 0])

    def test_codificacion_entera(self):
        """Σ c_i p^i, constante primero."""
        K = make_field(3, 2)
        self.assertEqual(element_from_int(K, 7).coeffs, (1, 2))
        with self.assertRaises(ErrorEntrada):
            element_from_int(K, 9)
