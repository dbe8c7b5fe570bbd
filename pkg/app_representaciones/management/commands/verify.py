"""
Verificador por lotes: corre todas las cláusulas de la clasificación.

Uso:
    python manage.py verify -g S3 -p 2 -b 4
    python manage.py verify -g C7 -p 2 -b 6 --trabajadores 4

Sale con 2 si alguna cláusula falla.
"""

from django.conf import settings

from app_representaciones.management.base import ComandoModular, renderizar_tabla
from app_representaciones.use_cases import verificar_clasificacion


class Command(ComandoModular):
    help = "Verifica las propiedades de la clasificación sobre F̄ para G en característica p."
    operacion = "verify"

    def agregar_argumentos(self, parser):
        parser.add_argument("-b", "--cota", type=int, default=None, help="Cota de grado (default: COTA_GRADO)")
        parser.add_argument(
            "--trabajadores",
            type=int,
            default=settings.MAX_TRABAJADORES,
            help="Hilos para las tareas por (W, n) (default: MAX_TRABAJADORES)",
        )

    def calcular(self, config, G, options):
        reporte = verificar_clasificacion.ejecutar(
            G, config.p, config.cota_grado, config.semilla, options["trabajadores"]
        )
        return reporte.to_dict()

    def tabla(self, documento):
        filas = [
            {
                "clausula": c["clausula"],
                "instancias": c["instancias"],
                "fallas": len(c["fallas"]),
                "estado": "OK" if c["aprobada"] else "FALLA",
            }
            for c in documento["clausulas"]
        ]
        lineas = [
            f"{documento['group']}, p = {documento['p']}, cota {documento['degree_bound']}, semilla {documento['seed']}",
            renderizar_tabla(filas, ["clausula", "instancias", "fallas", "estado"]),
        ]
        for c in documento["clausulas"]:
            lineas.extend(f"  {c['clausula']}: {detalle}" for detalle in c["fallas"])
        lineas.append(f"todas aprobadas: {'sí' if documento['all_passed'] else 'no'}")
        return "\n".join(lineas)

    def exito(self, documento):
        return documento["all_passed"]
