#include "larag/seed_corpus.hpp"

#include <filesystem>
#include <fstream>
#include <vector>

#include <nlohmann/json.hpp>

#include "larag/errors.hpp"

namespace larag {
namespace {

struct SeedSection {
    const char* anchor;
    const char* title;
    std::vector<const char*> paragraphs;  // raw HTML, may contain <a href> links
};

struct SeedPage {
    const char* path;
    const char* title;
    std::vector<SeedSection> sections;
};

// A fictional data platform ("Meridian") documented the way Sphinx renders
// technical manuals: anchored sections, relative cross-references with
// meaningful surrounding prose, a few external links, and one broken link.
const std::vector<SeedPage>& seed_pages() {
    static const std::vector<SeedPage> pages = {
        {"index.html", "Meridian Platform",
         {{"meridian-platform-overview", "Meridian Platform overview",
           {"Meridian Platform is a data management and decision automation suite for building, "
            "running, and monitoring enterprise data workflows. The platform combines two fully "
            "integrated components that share a common workspace, permission model, and storage "
            "layer.",
            "Meridian Flow is the processing engine. It lets analysts design dataflows on an "
            "interactive canvas, importing records from files and databases, transforming them "
            "with tasks, and exporting curated results. Read the <a href=\"flow/overview.html"
            "#flow-engine-overview\">Flow engine overview</a> before designing your first "
            "dataflow.",
            "Meridian Canvas is the presentation layer used to assemble dashboards from live "
            "widgets. Dashboards stay synchronized with the dataflows that feed them; see the "
            "<a href=\"canvas/overview.html#canvas-dashboards\">dashboard guide</a> for the "
            "building blocks.",
            "New installations should start from the <a href=\"install.html#installing-meridian\">"
            "installation guide</a>, which lists every supported operating system and the "
            "activation steps."}},
          {"platform-editions", "Editions and deployment modes",
           {"Meridian ships in a Desktop edition for single analysts and a Server edition for "
            "teams. Desktop runs every component in one process, while Server splits the "
            "scheduler, the execution workers, and the web front end across services.",
            "Both editions read the same project format, so a dataflow authored on Desktop can "
            "be promoted to a Server deployment without conversion. Version-controlled projects "
            "move between editions through the shared <a href=\"repository.html"
            "#repository-connections\">repository connection</a>."}}}},

        {"install.html", "Installing Meridian",
         {{"installing-meridian", "Installing Meridian Platform Desktop",
           {"This page walks through a Desktop installation from the signed installer package. "
            "Before launching the installer, confirm the workstation satisfies the "
            "<a href=\"requirements.html#system-requirements\">system requirements</a>; "
            "installations on undersized hosts fail late, during the first dataflow run, rather "
            "than at setup time.",
            "Run the installer with administrative privileges and accept the destination folder "
            "or choose a custom one. The installer deploys the Flow engine, the Canvas designer, "
            "and a private runtime; no system-wide interpreter is touched.",
            "On first launch the platform asks for a license key. Follow the "
            "<a href=\"license.html#license-activation\">license activation</a> procedure to "
            "register the key online, or use the offline exchange described on the same page "
            "when the workstation has no outbound network access."}},
          {"install-upgrade", "Upgrading an existing installation",
           {"Upgrades are performed in place: the installer detects the previous version, "
            "preserves workspaces, and migrates settings. Projects under version control should "
            "be pushed before upgrading so a clean checkpoint exists; see "
            "<a href=\"versioning.html#push-changes\">pushing changes</a>.",
            "After an upgrade the first start can take noticeably longer while task caches are "
            "rebuilt. Scheduled dataflows resume automatically once the engine reports ready."}}}},

        {"requirements.html", "System requirements",
         {{"system-requirements", "System requirements",
           {"Meridian Platform Desktop requires a 64-bit operating system: Windows 11, Windows "
            "Server 2019 or later, Ubuntu 22.04 or later, or macOS 13 or later. Virtualized "
            "environments are supported when the hypervisor exposes AVX2.",
            "The minimum hardware profile is 4 CPU cores, 16 GB of memory, and 10 GB of free "
            "disk space for the runtime plus workspace storage. Dataflows that pivot or join "
            "wide tables benefit from additional memory; the engine spills to disk only as a "
            "last resort.",
            "Server edition additionally needs a PostgreSQL 14 or later instance for the "
            "coordination database and a service account allowed to open listening sockets. "
            "Antivirus exclusions for the workspace folder avoid needless scan latency."}},
          {"supported-browsers", "Supported browsers",
           {"The Canvas web front end is tested on the two most recent releases of Chrome, "
            "Edge, and Firefox. JavaScript and cookies must stay enabled; private-browsing "
            "windows lose saved dashboard layouts when they close."}}}},

        {"license.html", "Licensing",
         {{"license-activation", "License activation",
           {"Every installation activates against the Meridian licensing service with the key "
            "printed on your order confirmation. Online activation completes in seconds and "
            "binds the key to a hardware fingerprint of the host.",
            "For air-gapped hosts, generate an activation request file from the login screen, "
            "submit it from any connected machine, and import the signed response. The offline "
            "exchange uses the same key and produces an identical license state.",
            "Licenses cover a fixed number of named users. Administrators assign seats from the "
            "platform settings; permissions for each seat are described under "
            "<a href=\"permissions.html#permissions-model\">permissions</a>. For seat-count "
            "changes contact <a href=\"mailto:licensing@meridian.example\">the licensing "
            "desk</a>."}}}},

        {"permissions.html", "Permissions",
         {{"permissions-model", "The permissions model",
           {"Permissions in Meridian attach to resources: workspaces, dataflows, dashboards, "
            "connections, and vault entries. A permission grants one of three levels, namely "
            "read, execute, or manage, and levels are strictly ordered so manage implies "
            "execute and execute implies read.",
            "Groups simplify administration: a resource grants a level to a group, and users "
            "inherit the highest level among their groups. Effective permissions are evaluated "
            "when a resource is opened, so revoking access takes effect on the next open, not "
            "retroactively on sessions already running.",
            "Vault entries deserve special care because they hold credentials. Only the manage "
            "level may reveal or rotate a secret; execute allows a dataflow to use the secret "
            "without displaying it. The <a href=\"vault.html#vault-resources\">vault guide</a> "
            "explains entry types and rotation."}}}},

        {"vault.html", "Credential vault",
         {{"vault-resources", "Vault resources",
           {"The vault stores secrets (passwords, API tokens, key files) as named entries that "
            "dataflows reference instead of embedding credentials in task options. An entry "
            "carries a type, an owner, and an audit trail of every read.",
            "Tasks request a vault entry by name at run time. Because the reference is "
            "indirect, rotating a password updates every dataflow that uses the entry without "
            "editing any task. Connections defined in the "
            "<a href=\"flow/connections.html#connection-manager\">connection manager</a> can "
            "bind their credential fields to vault entries.",
            "Vault contents never travel with exported projects. Importing a project on another "
            "installation recreates dangling references that an administrator must re-bind, "
            "which keeps secrets inside their original security boundary."}}}},

        {"versioning.html", "Version control",
         {{"versioned-resources", "Versioned resources",
           {"Dataflows, dashboards, and shared expressions can be placed under version control. "
            "A versioned resource tracks local edits against the copy in a remote repository "
            "and shows a pending-changes badge whenever the two diverge.",
            "Versioning is opt-in per resource. Enabling it requires a configured "
            "<a href=\"repository.html#repository-connections\">repository connection</a> and "
            "the execute level on that connection."}},
          {"push-changes", "Pushing changes",
           {"To publish local edits, open the resource's version panel, review the change list, "
            "write a summary message, and push. The push creates one revision in the remote "
            "repository and clears the pending badge.",
            "A push is rejected when the remote holds revisions you have not pulled. Pull "
            "first, resolve any conflicting sections in the merge view, and push again. "
            "Scheduled executions always run the last pushed revision, never unpushed local "
            "edits.",
            "Administrators can require a second reviewer for pushes into protected branches; "
            "the setting lives on the repository connection, as described under "
            "<a href=\"repository.html#changing-repository\">changing the repository of a "
            "versioned resource</a>."}}}},

        {"repository.html", "Repositories",
         {{"repository-connections", "Repository connections",
           {"A repository connection stores the location and credentials of a remote revision "
            "store: an HTTPS endpoint, an access token bound through the vault, and a default "
            "branch. Connections are workspace resources governed by the usual "
            "<a href=\"permissions.html#permissions-model\">permission levels</a>.",
            "The same repository may back several workspaces. Each versioned resource records "
            "which connection it uses, so different teams can publish to different remotes "
            "from one installation."}},
          {"changing-repository", "Changing the repository of a versioned resource",
           {"An already versioned resource can be re-pointed at a different repository "
            "connection from its version panel. Choose the new connection, pick the target "
            "branch, and confirm; the next push creates a fresh lineage in the new remote.",
            "Re-pointing never rewrites history in the old repository. Past revisions stay "
            "where they were created, and the resource keeps a note naming the previous "
            "connection for audit purposes. Push the pending state immediately after the "
            "switch so the new remote holds a complete baseline."}}}},

        {"flow/overview.html", "Meridian Flow",
         {{"flow-engine-overview", "Flow engine overview",
           {"Meridian Flow executes dataflows: directed graphs of tasks connected on an "
            "interactive canvas. Each task consumes the tables produced upstream, applies one "
            "operation (import, transform, export, or rule evaluation), and publishes its "
            "result to downstream tasks.",
            "Execution is incremental. The engine caches every task's last good output and "
            "recomputes only tasks whose options or inputs changed, which keeps iteration fast "
            "even on large flows. A full recompute can be forced from the run menu.",
            "Typical pipelines start with an import task (see <a href=\"import-files.html"
            "#import-spreadsheets\">importing files</a> and <a href=\"import-database.html"
            "#import-database\">importing from databases</a>), continue with "
            "<a href=\"transform.html#transform-tasks\">transform tasks</a>, and end by "
            "<a href=\"export.html#export-structures\">exporting data structures</a> or "
            "feeding dashboards."}},
          {"flow-run-monitoring", "Run monitoring",
           {"Every execution writes a run record with timings, row counts, and the warnings "
            "each task emitted. The monitor pane live-streams these records while a flow runs "
            "and keeps the last two hundred runs for inspection.",
            "Failures mark the offending task in red and preserve its input caches, so a fix "
            "can be validated by re-running just the failed stage. Alerting on failures is "
            "configured separately; see <a href=\"alerts.html#mail-alerts\">mail alerts</a>."}}}},

        {"flow/import-files.html", "Importing files",
         {{"import-spreadsheets", "Importing spreadsheets and delimited files",
           {"The file import task reads Excel workbooks, CSV, and other delimited text files "
            "from the workspace or from a mounted share. Point the task at a file, and the "
            "preview grid shows detected columns, types, and header rows before anything is "
            "committed to the flow.",
            "For Excel sources, choose the worksheet and an optional cell range; merged cells "
            "are unmerged and repeated. For delimited files the separator, quote character, and "
            "encoding are inferred and can be overridden in the task options.",
            "Large imports stream in batches, so a multi-gigabyte CSV does not need to fit in "
            "memory. Confirm the host satisfies the <a href=\"../requirements.html"
            "#system-requirements\">system requirements</a> before scheduling recurring imports "
            "of very wide workbooks.",
            "After import, cleaning steps such as dropping sparse columns are performed with "
            "<a href=\"transform.html#transform-tasks\">transform tasks</a>; a dedicated recipe "
            "for removing columns above a missing-value threshold appears in that chapter."}}}},

        {"flow/import-database.html", "Importing from databases",
         {{"import-database", "Importing from a database",
           {"The database import task pulls tables or query results from relational sources "
            "over a configured connection. Select the connection, then either pick a table "
            "from the catalog browser or paste a parameterized SQL query.",
            "Connections are defined once in the <a href=\"connections.html"
            "#connection-manager\">connection manager</a> and shared by every task; the import "
            "task itself stores only the connection name, keeping credentials out of the flow "
            "definition.",
            "Drivers for PostgreSQL, SQL Server, MySQL, and ODBC-compatible warehouses ship "
            "with the platform. Query imports honour fetch batching and can push simple row "
            "filters down to the source to reduce transferred volume."}},
          {"import-database-incremental", "Incremental loads",
           {"Incremental mode remembers a watermark column per import and fetches only rows "
            "beyond the last seen value on each run. Watermarks participate in run records, so "
            "re-running a failed flow never skips or duplicates a window."}}}},

        {"flow/connections.html", "Connections",
         {{"connection-manager", "The connection manager",
           {"The connection manager is the single catalog of every external endpoint the "
            "platform may touch: databases, file shares, mail servers, and HTTP services. A "
            "connection bundles a driver, an address, and credentials, and is referenced by "
            "name from tasks.",
            "Credential fields should be bound to <a href=\"../vault.html#vault-resources\">"
            "vault entries</a> rather than typed inline; bound fields show a lock badge and "
            "never render the secret. Sharing a connection grants use of the endpoint without "
            "revealing the password.",
            "Each connection has a test button that performs a real handshake and reports the "
            "round-trip time. Connections keep an audit trail of edits, and the "
            "<a href=\"../permissions.html#permissions-model\">permission levels</a> decide who "
            "may edit versus merely use them."}},
          {"connection-custom", "Custom service connections",
           {"Endpoints without a dedicated driver, such as a SharePoint site or an internal "
            "REST service, are configured as custom service connections. A custom connection "
            "stores a base URL, an authentication scheme (token, basic, or OAuth client "
            "credentials), and optional default headers.",
            "Tasks reference the custom connection and append relative paths to its base URL, "
            "so rotating a tenant URL or a token is a one-place change. OAuth secrets belong "
            "in the vault like any other credential."}}}},

        {"flow/export.html", "Exporting data",
         {{"export-structures", "Exporting a data structure",
           {"Export tasks write a dataflow's tables to external destinations. The database "
            "export task maps columns to a target table over a configured connection and "
            "supports append, truncate-insert, and merge-by-key write modes.",
            "Merge mode compares a key column set and updates matching rows while inserting "
            "new ones; it is transactional per batch, so a failed run leaves the target "
            "consistent. The connection used for export needs the execute level, granted "
            "through the <a href=\"connections.html#connection-manager\">connection "
            "manager</a>.",
            "File exports produce CSV, Excel, or Parquet into the workspace or a mounted "
            "share. On Server edition, exports to the local file system of the server are "
            "sandboxed to directories the administrator has allow-listed."}}}},

        {"flow/transform.html", "Transform tasks",
         {{"transform-tasks", "Transform tasks",
           {"Transform tasks reshape tables inside a dataflow: select and rename columns, "
            "filter rows, join tables, pivot, unpivot, and aggregate. Every transform is "
            "previewed on a sample before the full run, and previews update as options "
            "change.",
            "Column operations accept either a static column list or a predicate written in "
            "the <a href=\"expressions.html#expression-language\">expression language</a>. "
            "Predicates make flows robust to schema drift: a rule such as \"drop columns whose "
            "missing ratio exceeds 0.5\" keeps working when new columns appear.",
            "A common cleaning recipe after a spreadsheet import: add a column-filter "
            "transform, set the predicate to missing_ratio(column) > 0.5, and enable the "
            "drop-matching mode. The preview lists exactly which columns will be removed "
            "before you commit."}},
          {"transform-reshape", "Reshaping and merging datasets",
           {"Reshape-to-wide turns attribute rows into columns keyed by an index column set; "
            "reshape-to-long is its inverse. After reshaping, merge datasets with the join "
            "transform using the shared key columns.",
            "When combining several reshaped tables, verify the key columns carry identical "
            "types and no duplicate key tuples exist; the join preview flags both conditions. "
            "A deduplicate transform placed before the join removes exact duplicates "
            "deterministically, keeping the first occurrence in input order."}}}},

        {"flow/expressions.html", "Expression language",
         {{"expression-language", "The expression language",
           {"Expressions are short formulas evaluated per row or per column group, used in "
            "filters, computed columns, and validation rules. The language offers arithmetic, "
            "comparisons, boolean logic, string and date functions, and aggregate helpers "
            "such as mean, median, and missing_ratio.",
            "Identifiers name columns; quoting with square brackets allows spaces, as in "
            "[Order Date]. Functions compose freely: round(mean(amount), 2) computes a "
            "two-decimal mean. Type errors are reported at validation time with the offending "
            "fragment underlined.",
            "Variables declared at the flow level are referenced with a leading dollar sign, "
            "for example $region; their values come from the variable panel or from the "
            "environment, as described under <a href=\"variables.html#flow-variables\">flow "
            "variables</a>."}}}},

        {"flow/rules.html", "Rule engine",
         {{"rule-engine", "Generating and applying rules",
           {"The rule engine derives human-readable decision rules from labelled data and "
            "applies them as a scoring task inside dataflows. A generated ruleset lists "
            "conditions over input columns together with a predicted class and coverage "
            "statistics.",
            "Rules are ordinary text in the <a href=\"expressions.html#expression-language\">"
            "expression language</a>, so an analyst can edit a condition, tighten a threshold, "
            "or delete a rule outright. Edited rulesets keep a provenance note distinguishing "
            "generated from hand-modified rules.",
            "To modify a generated rule, open the ruleset editor, double-click the condition, "
            "and change it in place; validation re-checks columns and types immediately. The "
            "scoring task picks up the saved ruleset on the next run without re-training."}}}},

        {"flow/schedule.html", "Scheduling",
         {{"schedule-flows", "Scheduling dataflow runs",
           {"Any saved dataflow can run on a schedule: fixed intervals, cron expressions, or "
            "calendar rules such as the first working day of a month. Schedules belong to the "
            "Server edition's coordinator, which queues runs and enforces per-workspace "
            "concurrency limits.",
            "A schedule records the resolved configuration at creation time, namely the flow "
            "revision, the variable values, and the run priority. Changing variables later "
            "does not silently alter scheduled behaviour until the schedule is re-saved.",
            "Failed scheduled runs follow the retry policy on the schedule (none, fixed "
            "delay, or exponential backoff) and can raise <a href=\"alerts.html#mail-alerts\">"
            "mail alerts</a> after the final attempt."}}}},

        {"flow/alerts.html", "Alerts",
         {{"mail-alerts", "Mail alerts",
           {"Mail alerts notify people when a run finishes in a chosen state: failure, "
            "success, or completion with warnings. An alert names a mail connection, a "
            "recipient list, and a template for the subject and body.",
            "Create the mail connection first in the <a href=\"connections.html"
            "#connection-manager\">connection manager</a> (SMTP host, port, and a vault-bound "
            "password), then attach the alert either to one schedule or to a whole workspace.",
            "Alert templates can interpolate run facts: flow name, failing task, error "
            "message, and elapsed time. A setup error in the task options, for example a "
            "missing file or an invalid credential, is reported as a failure state and "
            "triggers the alert after the configured retries are exhausted."}}}},

        {"flow/variables.html", "Variables",
         {{"flow-variables", "Flow variables",
           {"Flow variables parameterize a dataflow: file paths, region codes, thresholds. A "
            "variable has a name, a type, and a default, and tasks reference it as $name "
            "wherever a literal would appear.",
            "Values are resolved at run start with a fixed precedence: run-dialog overrides "
            "beat schedule values, schedule values beat workspace defaults, and workspace "
            "defaults beat the flow's own defaults.",
            "Variables whose values differ per deployment, such as hostnames or enterprise "
            "identifiers, should not be hard-coded into the flow at all; bind them to "
            "<a href=\"environment.html#environment-variables\">environment variables</a> so "
            "each installation supplies its own value."}},
          {"branch-variables", "Branch variables",
           {"Branch variables are set by tasks during a run and consumed downstream, letting "
            "one branch of the flow steer another. A router task, for example, writes the "
            "chosen partition name into a branch variable that a later export task embeds in "
            "its target path.",
            "Unlike flow variables, branch variables have no defaults and exist only for the "
            "lifetime of one run. Reading a branch variable before any task has written it is "
            "a validation error, caught before execution starts. A typical example: a quality "
            "gate writes $qa_status to either passed or quarantined, and the final export "
            "writes rows into a folder named after $qa_status."}}}},

        {"flow/environment.html", "Environment variables",
         {{"environment-variables", "Environment variables",
           {"Environment variables carry per-installation values that flows consume through "
            "their variable bindings: enterprise hostnames, tenant identifiers, shared folder "
            "roots. They are defined by administrators in the platform settings, not inside "
            "any flow.",
            "To substitute an internal variable with an enterprise value, create an "
            "environment variable with the enterprise value, then bind the flow variable to it "
            "from the variable panel; the binding shows as $name -> env:NAME. At run start the "
            "environment value wins over the flow default everywhere the variable is used.",
            "Environment variables are plain values, not secrets. Credentials belong in the "
            "<a href=\"../vault.html#vault-resources\">vault</a>, which adds access control "
            "and auditing that environment variables deliberately lack."}}}},

        {"flow/macros.html", "Macros",
         {{"recording-macros", "Recording events as macros",
           {"The macro recorder captures a sequence of canvas actions, such as adding tasks, "
            "wiring links, or setting options, as a replayable macro. Start recording from the "
            "automation menu, perform the actions, and stop; every captured event appears in "
            "an ordered list.",
            "Recorded events can be edited before saving: reorder steps, delete accidental "
            "clicks, or generalize a literal into a prompt that asks for a value at replay "
            "time. Saving stores the macro in the workspace's macro library under a chosen "
            "name.",
            "Replaying a macro applies its events to the current flow. Macros shared through "
            "the library respect <a href=\"../permissions.html#permissions-model\">"
            "permissions</a>: read lets a user replay, manage lets them edit the stored "
            "events."}}}},

        {"canvas/overview.html", "Meridian Canvas",
         {{"canvas-dashboards", "Dashboards",
           {"Meridian Canvas assembles dashboards from widgets bound to dataflow outputs. A "
            "dashboard is a grid of cells; each cell hosts one widget and widgets share a "
            "selection model, so clicking a bar in one chart filters the tables next to it.",
            "Dashboards refresh when their source dataflows publish new results. A manual "
            "refresh button and a per-dashboard auto-refresh interval cover sources that "
            "update outside schedules.",
            "Layouts adapt to the viewer's window; cells reflow by priority. The editing "
            "experience with the available widget types is described in the "
            "<a href=\"widgets.html#widget-catalog\">widget catalog</a>, and cross-widget "
            "interactivity under <a href=\"filters.html#interactive-filters\">interactive "
            "filters</a>."}},
          {"canvas-automation", "Launching flows from dashboards",
           {"A dashboard can embed an action widget that launches a dataflow with chosen "
            "variable values, turning a dashboard into a small control panel. The action "
            "widget lists the flow's variables in a dynamic window rendered from their types: "
            "dropdowns for enumerations, date pickers for dates, free fields for text.",
            "Launch permissions mirror the flow's own: the viewer needs execute on the flow, "
            "and the run appears in the monitor pane exactly like a scheduled one. Values "
            "entered in the window follow the same precedence as run-dialog overrides."}}}},

        {"canvas/widgets.html", "Widgets",
         {{"widget-catalog", "The widget catalog",
           {"Widgets visualize one bound table each: bar, line, and scatter charts, pivot "
            "grids, single-value tiles, maps, and free text. Binding a widget means picking a "
            "dataflow output and mapping its columns onto the widget's slots, such as axis, "
            "series, and value.",
            "Widgets inherit a dashboard-level theme and accept per-widget overrides for "
            "number formats, color scales, and titles. A widget with an incomplete binding "
            "renders a placeholder naming the missing slot rather than an empty chart.",
            "Tile widgets support conditional styling through small expressions, re-using the "
            "<a href=\"../flow/expressions.html#expression-language\">expression language</a>; "
            "a tile can turn red when value < threshold without any scripting."}}}},

        {"canvas/filters.html", "Interactive filters",
         {{"interactive-filters", "Interactive filters",
           {"Filters restrict what every widget on a dashboard displays. A filter widget "
            "exposes one column as a control, such as a dropdown, range slider, or search "
            "box, and its current selection composes with the selections of all other "
            "filters.",
            "Filter state is per viewer and does not modify stored data. A shared dashboard "
            "link can pin an initial filter state, which is how teams distribute focused "
            "views of one <a href=\"widgets.html#widget-catalog\">widget</a> arrangement "
            "without duplicating dashboards.",
            "Real-time editing mode additionally lets authorized viewers correct cell values "
            "in grid widgets; edits flow back to a writeback table, never to the source, and "
            "each edit records the author. This legacy behaviour is being replaced, see "
            "<a href=\"writeback.html#writeback-tables\">writeback tables</a> for the "
            "successor design."}}}},
    };
    return pages;
}

std::string page_html(const SeedPage& page) {
    std::string html;
    html += "<!DOCTYPE html>\n<html>\n<head>\n<meta charset=\"utf-8\"/>\n<title>";
    html += page.title;
    html += "</title>\n</head>\n<body>\n";
    for (const auto& section : page.sections) {
        html += "<section id=\"";
        html += section.anchor;
        html += "\">\n<h1>";
        html += section.title;
        html += "</h1>\n";
        for (const auto* paragraph : section.paragraphs) {
            html += "<p>";
            html += paragraph;
            html += "</p>\n";
        }
        html += "</section>\n";
    }
    // A footer with an external reference, present on every page.
    html += "<div class=\"footer\">\n<p>Meridian Platform documentation. Formats follow "
            "<a href=\"https://www.rfc-editor.org/rfc/rfc4180\">RFC 4180</a> where "
            "applicable.</p>\n</div>\n</body>\n</html>\n";
    return html;
}

}  // namespace

std::size_t write_seed_corpus(const std::string& dir) {
    namespace fs = std::filesystem;
    for (const auto& page : seed_pages()) {
        const fs::path path = fs::path(dir) / page.path;
        fs::create_directories(path.parent_path());
        std::ofstream out(path, std::ios::binary);
        if (!out) throw Error("cannot write seed corpus page: " + path.string());
        out << page_html(page);
    }
    return seed_pages().size();
}

std::vector<BenchmarkCase> seed_benchmark_cases() {
    return {
        {"q01",
         "How do I import an Excel workbook into a dataflow and control which worksheet and "
         "cell range are read?",
         "Use the file import task: point it at the workbook, and the preview grid shows the "
         "detected columns and header rows. For Excel sources you choose the worksheet and an "
         "optional cell range; merged cells are unmerged and repeated. Separator, quote "
         "character, and encoding only apply to delimited files and can be overridden in the "
         "task options."},
        {"q02",
         "Explain how to import data from a table in a PostgreSQL database into a dataflow, "
         "including where the connection is configured.",
         "Add a database import task, select a connection defined in the connection manager, "
         "then pick a table from the catalog browser or paste a parameterized SQL query. The "
         "task stores only the connection name, so credentials stay out of the flow "
         "definition. Drivers for PostgreSQL, SQL Server, MySQL, and ODBC warehouses ship "
         "with the platform."},
        {"q03",
         "Provide instructions for installing Meridian Platform Desktop and list the required "
         "prerequisites.",
         "Confirm the workstation satisfies the system requirements: a 64-bit operating "
         "system such as Windows 11, Ubuntu 22.04, or macOS 13, with 4 CPU cores, 16 GB of "
         "memory, and 10 GB of free disk space. Then run the signed installer with "
         "administrative privileges, accept or choose the destination folder, and on first "
         "launch complete license activation with your license key, online or through the "
         "offline exchange."},
        {"q04",
         "Explain how to export a data structure to a database and what the available write "
         "modes do.",
         "Add a database export task, map columns to the target table over a configured "
         "connection, and choose a write mode: append, truncate-insert, or merge-by-key. "
         "Merge mode compares a key column set, updates matching rows, inserts new ones, and "
         "is transactional per batch. The connection needs the execute permission level."},
        {"q05",
         "How can I set up a custom connection to a SharePoint site in a task?",
         "Create a custom service connection in the connection manager: store the base URL, "
         "pick an authentication scheme such as token, basic, or OAuth client credentials, "
         "and add optional default headers. Bind secrets to vault entries. Tasks then "
         "reference the connection and append relative paths to its base URL."},
        {"q06",
         "How do I schedule a dataflow to run on the first working day of each month?",
         "Create a schedule on the saved dataflow using a calendar rule such as the first "
         "working day of a month. The schedule records the resolved configuration at creation "
         "time: the flow revision, variable values, and run priority. The coordinator queues "
         "runs and enforces per-workspace concurrency limits."},
        {"q07",
         "How can I set up an alert that sends a mail when a task setup error causes a run to "
         "fail?",
         "First create a mail connection in the connection manager with the SMTP host, port, "
         "and a vault-bound password. Then create a mail alert for the failure state, name "
         "the recipients and a template. A setup error in the task options is reported as a "
         "failure and triggers the alert after the configured retries are exhausted."},
        {"q08",
         "What are branch variables? Give me an example of their use.",
         "Branch variables are set by tasks during a run and consumed downstream, letting one "
         "branch steer another. They have no defaults and exist only for the lifetime of one "
         "run; reading one before it is written is a validation error. Example: a quality "
         "gate writes $qa_status to passed or quarantined, and the final export writes rows "
         "into a folder named after $qa_status."},
        {"q09",
         "I need to substitute an internal variable with an enterprise value on each "
         "installation. How do I do it?",
         "Create an environment variable holding the enterprise value in the platform "
         "settings, then bind the flow variable to it from the variable panel; the binding "
         "shows as $name -> env:NAME. At run start the environment value wins over the flow "
         "default. Credentials do not belong there; use the vault for secrets."},
        {"q10",
         "Explain how to record canvas events and store them as a macro.",
         "Start recording from the automation menu, perform the canvas actions, and stop; "
         "every captured event appears in an ordered list. Edit the events, reorder or delete "
         "steps, or generalize a literal into a prompt, then save the macro into the "
         "workspace's macro library under a chosen name."},
        {"q11",
         "Provide a detailed explanation of how to import an Excel file and automatically "
         "remove any columns that have more than 50% missing values.",
         "Import the workbook with the file import task, choosing the worksheet and range. "
         "Then add a column-filter transform, set the predicate to missing_ratio(column) > "
         "0.5, and enable the drop-matching mode; the preview lists exactly which columns "
         "will be removed before you commit."},
        {"q12",
         "How do I reference a flow variable inside an expression, and how are spaces in "
         "column names handled?",
         "Variables are referenced with a leading dollar sign, for example $region, and their "
         "values come from the variable panel or the environment. Column names with spaces "
         "are quoted with square brackets, as in [Order Date]. Functions compose freely, for "
         "example round(mean(amount), 2)."},
        {"q13",
         "I need to modify a rule generated by the rule engine. How can I do it?",
         "Open the ruleset editor, double-click the condition, and change it in place; rules "
         "are ordinary text in the expression language. Validation re-checks columns and "
         "types immediately, the edited ruleset keeps a provenance note, and the scoring task "
         "picks up the saved ruleset on the next run without re-training."},
        {"q14",
         "How can I control launching a dataflow with chosen variable values from a dashboard?",
         "Embed an action widget in the dashboard. It lists the flow's variables in a dynamic "
         "window rendered from their types: dropdowns for enumerations, date pickers for "
         "dates, free fields for text. The viewer needs the execute permission on the flow, "
         "and entered values follow the run-dialog precedence."},
        {"q15",
         "What happens when a widget's binding is incomplete, and how are widgets styled "
         "conditionally?",
         "A widget with an incomplete binding renders a placeholder naming the missing slot "
         "rather than an empty chart. Tile widgets support conditional styling through small "
         "expressions in the expression language, so a tile can turn red when value < "
         "threshold without scripting."},
        {"q16",
         "How do interactive filters behave across widgets, and can I share a dashboard with "
         "a preset filter state?",
         "A filter widget exposes one column as a control, and its selection composes with "
         "all other filters to restrict every widget on the dashboard. Filter state is per "
         "viewer and does not modify stored data. A shared dashboard link can pin an initial "
         "filter state to distribute focused views."},
        {"q17",
         "Provide instructions on how to push changes in a versioned resource.",
         "Open the resource's version panel, review the change list, write a summary message, "
         "and push; this creates one revision in the remote repository and clears the pending "
         "badge. If the remote holds revisions you have not pulled, pull first, resolve "
         "conflicts in the merge view, and push again. Scheduled executions always run the "
         "last pushed revision."},
        {"q18",
         "How can I change the repository connection of an already versioned resource?",
         "Re-point the resource from its version panel: choose the new repository connection, "
         "pick the target branch, and confirm. The next push creates a fresh lineage in the "
         "new remote; history in the old repository is never rewritten, and the resource "
         "keeps a note naming the previous connection. Push immediately after the switch."},
        {"q19",
         "How does license activation work on a host without network access?",
         "Generate an activation request file from the login screen, submit it from any "
         "connected machine, and import the signed response. The offline exchange uses the "
         "same license key and produces an identical license state, bound to the hardware "
         "fingerprint of the host."},
        {"q20",
         "What are the components of the Meridian Platform and what does each one do?",
         "The platform has two fully integrated components. Meridian Flow is the processing "
         "engine where analysts design dataflows on an interactive canvas: importing, "
         "transforming, and exporting data. Meridian Canvas is the presentation layer that "
         "assembles dashboards from live widgets, staying synchronized with the dataflows "
         "that feed them."},
    };
}

void write_seed_suite(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write benchmark suite: " + path);
    for (const auto& c : seed_benchmark_cases()) {
        nlohmann::json j;
        j["query_id"] = c.query_id;
        j["question"] = c.question;
        j["reference"] = c.reference;
        out << j.dump() << "\n";
    }
}

}  // namespace larag
