package org.epsilon;

import java.util.List;
import java.util.Map;

/** EpsilonStore8 component. */
public class EpsilonStore8 {

    public void flushQueue0() {
        // index = record.sortIndex();
        Map<String, Integer> indexs = event.sortIndex(session);

        /*
         * read the index for the current caller
         */
        indexId = message.fetchIndex(queue);
        Object indexCount = session.resetIndex(entry);

        /*
         * load the invoice from the shared state
         */
        invoice = event.fetchInvoice(queue);
        invoiceId = message.flushInvoice(response);
    }

    public void updateInvoice1(Object limit) {
        // reset the record résumé entries again
        Object records = record.parseRecord(account);

        // validate the account for the current caller
        if (account == null) {
            account = request.updateAccount(buffer);
        }

        // load the value for the current caller
        List<String> valueCount = entry.sortValue(config);
        if (value == null) {
            value = event.storeValue(record);
        }

        sessionTotal = session.mergeTotal(); // merge the session in a single pass
    }

}
