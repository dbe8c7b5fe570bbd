# app_representaciones/management/base.py
"""
Base común de los comandos de la CLI.

Cada subcomando define:
- operacion: nombre usado en la clave de la caché y en el documento
- agregar_argumentos(parser): sus banderas propias
- preparar(options) → (RunConfig, partes de la clave, contexto)
- calcular(config, contexto, options) → dict con el resultado
- tabla(documento) → texto para --format table

El documento estructurado se arma siempre, aun con --format table: la tabla
se renderiza desde él, así la salida es la misma venga o no de la caché.

Códigos de salida:
- 0: éxito (y acuerdo total en count / verify)
- 1: uso, entrada, E/S o topes
- 2: falla de consistencia o reporte en desacuerdo
"""

import sys
from functools import partial
from pathlib import Path

import pandas as pd
from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from app_representaciones.domain.config import RunConfig
from app_representaciones.domain.enums import VERSION_ESQUEMA, FormatoSalida
from app_representaciones.domain.errores import ErrorConsistencia, ErrorModular
from app_representaciones.services.cache_resultados import CacheResultados
from app_representaciones.services.catalogo import cargar_grupo
from app_representaciones.services.limites import aplicar_limites
from app_representaciones.services.serializacion import a_json, digest, leer_modulo, modulo_a_documento

EXITO = 0
ERROR_USO = 1
ERROR_CONSISTENCIA = 2


def _error_de_uso(parser, message):
    # argparse sale con 2; ese código queda reservado a las fallas de consistencia
    if parser.called_from_command_line:
        parser.print_usage(sys.stderr)
        parser.exit(ERROR_USO, f"{parser.prog}: error: {message}\n")
    raise CommandError(f"Error: {message}", returncode=ERROR_USO)


def renderizar_tabla(filas: list[dict], columnas: list[str]) -> str:
    if not filas:
        return "(sin filas)"
    return pd.DataFrame(filas, columns=columnas).to_string(index=False)


class ComandoModular(BaseCommand):
    operacion = ""
    # comandos que leen un archivo de módulo en lugar de -g / -p
    usa_modulo = False
    requires_system_checks = []

    def create_parser(self, prog_name, subcommand, **kwargs):
        parser = super().create_parser(prog_name, subcommand, **kwargs)
        parser.error = partial(_error_de_uso, parser)
        return parser

    def add_arguments(self, parser):
        if self.usa_modulo:
            parser.add_argument("modulo", help="Archivo JSON del módulo")
        else:
            parser.add_argument("-g", "--grupo", required=True, help="Nombre del catálogo o archivo de grupo")
            parser.add_argument("-p", type=int, required=True, help="Característica (primo)")
        parser.add_argument("--seed", type=int, default=settings.SEMILLA, help="Semilla del MeatAxe (u64)")
        parser.add_argument(
            "--cache-dir",
            default=settings.CACHE_RESULTADOS_DIR or None,
            help="Directorio de la caché de resultados (default: sin caché)",
        )
        parser.add_argument(
            "--verificar-cache",
            action="store_true",
            default=settings.VERIFICAR_CACHE,
            help="Recalcular aunque haya entrada en caché y reescribirla si no coincide",
        )
        parser.add_argument(
            "--format",
            choices=[f.value for f in FormatoSalida],
            default=FormatoSalida.TABLA.value,
            help="Formato de salida (default: table)",
        )
        parser.add_argument("--max-group-order", type=int, default=None, help="Tope de |G| para esta corrida")
        parser.add_argument("--max-field-size", type=int, default=None, help="Tope de p^n para esta corrida")
        parser.add_argument("--salida", default=None, help="Escribir la salida en este archivo en lugar de stdout")
        self.agregar_argumentos(parser)

    def agregar_argumentos(self, parser):
        pass

    # ─── Entradas ────────────────────────────────────────────────────────────

    def config_desde_opciones(self, options, grupo: str, p: int, cota: int = None) -> RunConfig:
        return RunConfig(
            grupo=grupo,
            p=p,
            cota_grado=cota if cota is not None else settings.COTA_GRADO,
            semilla=options["seed"],
            cache_dir=Path(options["cache_dir"]) if options["cache_dir"] else None,
            formato=FormatoSalida(options["format"]),
            max_orden_grupo=options["max_group_order"],
            max_tamano_cuerpo=options["max_field_size"],
        )

    def preparar(self, options):
        """Por defecto: grupo y primo de las banderas; los comandos de módulo leen el archivo."""
        if self.usa_modulo:
            V = leer_modulo(options["modulo"])
            config = self.config_desde_opciones(options, options["modulo"], V.field.p, options.get("cota"))
            partes = {"modulo": digest(modulo_a_documento(V))}
            return config, partes, V
        config = self.config_desde_opciones(options, options["grupo"], options["p"], options.get("cota"))
        G = cargar_grupo(config.grupo)
        partes = {"grupo": G.to_dict(), "p": config.p, "cota": config.cota_grado}
        return config, partes, G

    def partes_extra(self, options) -> dict:
        return {}

    # ─── Cálculo ─────────────────────────────────────────────────────────────

    def calcular(self, config: RunConfig, contexto, options) -> dict:
        raise NotImplementedError

    def tabla(self, documento: dict) -> str:
        raise NotImplementedError

    def exito(self, documento: dict) -> bool:
        return True

    def handle(self, *args, **options):
        try:
            with aplicar_limites(
                max_orden_grupo=options["max_group_order"],
                max_tamano_cuerpo=options["max_field_size"],
            ):
                config, partes, contexto = self.preparar(options)
                partes = {**partes, "semilla": config.semilla, **self.partes_extra(options)}
                cache = CacheResultados(config.cache_dir, verificar=options["verificar_cache"])
                resultado = cache.obtener_o_calcular(
                    self.operacion, partes, lambda: self.calcular(config, contexto, options)
                )
        except ErrorConsistencia as e:
            raise CommandError(f"Falla de consistencia: {e}", returncode=ERROR_CONSISTENCIA) from e
        except ErrorModular as e:
            raise CommandError(str(e), returncode=ERROR_USO) from e
        except OSError as e:
            raise CommandError(f"Error de E/S: {e}", returncode=ERROR_USO) from e

        documento = {"schema_version": VERSION_ESQUEMA, "comando": self.operacion, **resultado}
        if config.formato == FormatoSalida.ESTRUCTURADO:
            texto = a_json(documento)
        else:
            texto = self.tabla(documento)
        self.emitir(texto, options["salida"])

        if not self.exito(documento):
            raise CommandError(f"{self.operacion}: el reporte no está en acuerdo total.", returncode=ERROR_CONSISTENCIA)

    def emitir(self, texto: str, salida):
        if salida:
            try:
                Path(salida).write_text(texto + "\n", encoding="utf-8")
            except OSError as e:
                raise CommandError(f"No se pudo escribir {salida}: {e}", returncode=ERROR_USO) from e
            self.stderr.write(self.style.SUCCESS(f"Salida escrita en {salida}"))
        else:
            self.stdout.write(texto)
