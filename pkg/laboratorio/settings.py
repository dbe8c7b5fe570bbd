# laboratorio/settings.py
import os
from pathlib import Path

# ─── Ruta base del proyecto ───────────────────────────────────────────────────
BASE_DIR = Path(__file__).resolve().parent.parent

# ─── Seguridad ────────────────────────────────────────────────────────────────
# DEBUG se define primero para que SECRET_KEY pueda depender de él.
DEBUG = os.getenv("DEBUG", "True") == "True"

# No hay sesiones ni formularios; Django igual exige una clave.
_secret_key = os.getenv("SECRET_KEY", "dev-key-insegura-cambiar-en-produccion" if DEBUG else "")
if not _secret_key:
    from django.core.exceptions import ImproperlyConfigured
    raise ImproperlyConfigured(
        "SECRET_KEY no está configurada. Agregar la variable de entorno SECRET_KEY."
    )
SECRET_KEY = _secret_key

ALLOWED_HOSTS = []

# ─── Aplicaciones ─────────────────────────────────────────────────────────────
INSTALLED_APPS = [
    "app_representaciones",
]

# ─── Base de datos ────────────────────────────────────────────────────────────
# Ningún modelo: la app no persiste nada en la base. Queda sqlite para que
# `manage.py test` y pytest-django arranquen sin configuración extra.
DATABASES = {
    "default": {
        "ENGINE": "django.db.backends.sqlite3",
        "NAME": BASE_DIR / "db.sqlite3",
    }
}

# ─── Topes de escritorio ──────────────────────────────────────────────────────
# Las banderas --max-group-order y --max-field-size los pisan por corrida
# (ver app_representaciones/services/limites.py).
MAX_ORDEN_GRUPO   = int(os.getenv("MAX_ORDEN_GRUPO", "200"))
MAX_TAMANO_CUERPO = int(os.getenv("MAX_TAMANO_CUERPO", str(2 ** 20)))

# ─── Clasificación ────────────────────────────────────────────────────────────
# COTA_GRADO cubre todos los cuerpos de descomposición de grupos de orden ≤ 24
# con p ∈ {2, 3}.
COTA_GRADO = int(os.getenv("COTA_GRADO", "6"))
SEMILLA    = int(os.getenv("SEMILLA", "0"))

# ─── MeatAxe ──────────────────────────────────────────────────────────────────
# Reintentos del algoritmo de Las Vegas antes de rendirse con ErrorNoConcluyente.
MAX_INTENTOS_MEATAXE = int(os.getenv("MAX_INTENTOS_MEATAXE", "200"))
# Hasta cuántos elementos de Hom se barren exhaustivamente al buscar un isomorfismo.
TOPE_BARRIDO         = int(os.getenv("TOPE_BARRIDO", "4096"))

# ─── Verificador ──────────────────────────────────────────────────────────────
MAX_TRABAJADORES = int(os.getenv("MAX_TRABAJADORES", "1"))

# ─── Caché de resultados ──────────────────────────────────────────────────────
# Vacío = sin caché salvo que se pase --cache-dir.
CACHE_RESULTADOS_DIR = os.getenv("CACHE_RESULTADOS_DIR", "").strip()
# True = recalcular aunque haya entrada y reescribirla si difiere.
VERIFICAR_CACHE = os.getenv("VERIFICAR_CACHE", "False") == "True"

# El framework de caché de Django no se usa con alias: cache_resultados arma
# su propio FileBasedCache por directorio.
CACHES = {
    "default": {"BACKEND": "django.core.cache.backends.dummy.DummyCache"},
}

# ─── Error tracking: Sentry ──────────────────────────────────────────────────
# Solo activo con DEBUG=False y SENTRY_DSN seteada (corridas largas del verificador
# en un servidor).
_sentry_dsn = os.getenv("SENTRY_DSN", "").strip()
if not DEBUG and _sentry_dsn:
    import sentry_sdk
    sentry_sdk.init(
        dsn=_sentry_dsn,
        traces_sample_rate=0.1,
        send_default_pii=False,
    )

# ─── Internacionalización ─────────────────────────────────────────────────────
LANGUAGE_CODE = "es-ar"
USE_I18N = True
USE_TZ = True
TIME_ZONE = "America/Argentina/Buenos_Aires"

# ─── Misc ─────────────────────────────────────────────────────────────────────
DEFAULT_AUTO_FIELD = "django.db.models.BigAutoField"

# ─── Logging ──────────────────────────────────────────────────────────────────
# Todo a stderr: stdout queda reservado para el reporte.
LOG_LEVEL = os.getenv("LOG_LEVEL", "WARNING").upper()
LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "simple": {"format": "%(levelname)s %(name)s: %(message)s"},
    },
    "handlers": {
        "console": {
            "class": "logging.StreamHandler",
            "stream": "ext://sys.stderr",
            "formatter": "simple",
        },
    },
    "loggers": {
        "app_representaciones": {"handlers": ["console"], "level": LOG_LEVEL, "propagate": False},
    },
}
